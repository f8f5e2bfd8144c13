#pragma once

#include <string>

#include "polycert/polynomial.hpp"
#include "polycert/symbols.hpp"

namespace polycert {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Grammar: rational literals (`-7`, `11/16`; float literals rejected),
// declared identifiers, `+ - * ^`, parentheses. `^` binds tighter than `*`,
// which binds tighter than `+`/`-`; multiplication is explicit; unary minus
// allowed. The result is fully expanded.
Polynomial parse_poly(const std::string& text, const SymbolTable& table);

}  // namespace polycert
