#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polycert/polynomial.hpp"
#include "polycert/symbols.hpp"

namespace polycert {

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// W_{sigma,1,k} x_1 + ... + W_{sigma,sigma-1,k} x_{sigma-1} + x_sigma.
// The coefficient of x_sigma is always exactly 1; sigma = 1 is the bare x_1
// and carries no parameters.
struct LinearForm {
    int sigma = 1;
    int iteration = 0;
    std::vector<SymbolId> coeff_params;  // positions 1 .. sigma-1

    Polynomial to_polynomial() const;
    // The form after parameter substitution (leading coefficient stays 1).
    Polynomial to_polynomial(const std::map<SymbolId, ParamRat>& bindings) const;
};

// One product c * x_1^{j_1} * L_2^{j_2} * ... * L_n^{j_n}. Forms are stored
// only for positions with a positive exponent (and never for position 1).
struct FactorTerm {
    ParamRat coefficient;
    std::vector<int> exponents;  // j_1 .. j_n
    std::vector<LinearForm> forms;

    bool any_odd_exponent() const;
    Polynomial product_polynomial() const;  // without the coefficient
};

struct FormalFactorization {
    std::vector<FactorTerm> factors;  // extraction order
    Polynomial remainder;             // involves x_1 only
    std::vector<SymbolId> params;     // every parameter minted, in minting order
    int n_variables = 0;

    bool operator==(const FormalFactorization& other) const;
};

// Rule vectors assign one value per minted parameter, in minting order.
// Values may mention fresh symbols, which re-parameterizes the result.
struct RuleSet {
    std::vector<std::vector<ParamRat>> rules;
};

// A factorization after applying one rule vector; factor terms whose
// coefficient collapsed to zero are dropped, the rest keep factored shape.
struct EvaluatedTerm {
    ParamRat coefficient;
    std::vector<int> exponents;
    std::vector<Polynomial> forms;  // aligned with positive exponents >= position 2
    std::vector<int> form_positions;
};

struct EvaluatedFactorization {
    std::vector<EvaluatedTerm> terms;
    Polynomial remainder;

    Polynomial expand() const;
};

struct FactorOptions {
    // Guard against a runaway loop; the reduction strictly decreases the
    // leading monomial so this is never reached on valid input.
    std::size_t iteration_cap_scale = 10;
};

// Reduction loop: take the maximum term, subtract the matching product of
// linear-like forms with fresh undetermined parameters, and repeat until only
// x_1-terms remain. Fresh parameters are minted deterministically as
// W_{sigma,rho,iteration}, only for forms raised to a positive power.
FormalFactorization formal_lf(const Polynomial& p, SymbolTable& table,
                              const FactorOptions& options = {});

// Symbolic expansion over states and parameters; equals the input identically.
Polynomial expand(const FormalFactorization& f);

std::vector<EvaluatedFactorization> evaluate(const FormalFactorization& f, const RuleSet& rules);
EvaluatedFactorization evaluate_with(const FormalFactorization& f,
                                     const std::map<SymbolId, ParamRat>& bindings);

}  // namespace polycert
