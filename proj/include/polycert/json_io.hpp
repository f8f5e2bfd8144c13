#pragma once

#include <optional>
#include <string>

#include "polycert/feedback.hpp"

namespace polycert {

// System description file: JSON object with ordered state names, inputs,
// optional plant constants, right-hand side expressions, and optionally a
// Lyapunov expression, a feedback template (monomial lists per input) and a
// degree bound.
struct SystemDocument {
    SymbolTable table;
    PolySystem system;
    std::optional<LyapunovSpec> lyapunov;
    std::optional<FeedbackTemplate> feedback_template;
    std::optional<int> degree;
};

SystemDocument parse_system(const std::string& json_text);

// Feedback witness file: {"laws": ["<state expression>", ...]}.
std::vector<Polynomial> parse_feedback_laws(const std::string& json_text,
                                            const SymbolTable& table, int m);

// Versioned certificate documents (schema_version 1); exact rationals are
// rendered as "p/q" strings, key order is fixed.
std::string factorization_to_json(const FormalFactorization& f, const SymbolTable& table);
std::string certificate_to_json(const Certificate& cert, const Polynomial& input,
                                const SymbolTable& table);
std::string no_certificate_json(const std::string& reason);
std::string family_to_json(const FeedbackFamily& family, const SymbolTable& table,
                           const JacobianPair* linearization = nullptr);

}  // namespace polycert
