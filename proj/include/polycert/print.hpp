#pragma once

#include <string>

#include "polycert/feedback.hpp"
#include "polycert/formal_factor.hpp"
#include "polycert/positivity.hpp"

namespace polycert {

// All printers are deterministic: polynomial terms in descending variable
// order, parameter terms in ascending graded order, exact rationals as p/q.

std::string to_string(const Monomial& m, const SymbolTable& table);
std::string to_string(const ParamPoly& p, const SymbolTable& table);
std::string to_string(const ParamRat& r, const SymbolTable& table);
std::string to_string(const Polynomial& p, const SymbolTable& table);
std::string to_string(const FormalFactorization& f, const SymbolTable& table);
std::string to_string(const EvaluatedFactorization& f, const SymbolTable& table);
std::string to_string(const SumOfSquares& sos, const SymbolTable& table);
std::string to_string(const SolutionSet& s, const SymbolTable& table);

}  // namespace polycert
