#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "polycert/monomial.hpp"
#include "polycert/param_rat.hpp"

namespace polycert {

// Sparse multivariable polynomial in the positioned variables with
// rational-function coefficients in the parameters. Stored coefficients are
// never zero; the term map is ordered by the variable order, so the maximum
// term is the last entry.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const ParamRat& c);
    static Polynomial variable(int position, int exponent = 1);
    static Polynomial term(const Monomial& m, const ParamRat& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int degree() const;
    // True when every monomial is a power of the given position (or constant).
    bool depends_only_on(int position) const;
    bool has_variables_above(int bound) const;
    ParamRat coefficient_of(const Monomial& m) const;

    // Term with the largest monomial. Throws on the zero polynomial.
    std::pair<ParamRat, Monomial> maxterm() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial scaled(const ParamRat& c) const;
    Polynomial pow(int k) const;
    // In-place subtraction stealing the argument's coefficients.
    void sub_in_place(Polynomial&& other);

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    // Simultaneous replacement of variables by polynomials (used to close a
    // loop: inputs become feedback laws). Replacements must not reintroduce
    // any substituted position.
    Polynomial substituted_vars(const std::map<int, Polynomial>& bindings) const;
    Polynomial substituted_params(const std::map<SymbolId, ParamRat>& bindings) const;
    Polynomial partial_derivative(int position) const;

    Rational evaluate(const std::map<int, Rational>& var_values,
                      const std::map<SymbolId, Rational>& param_values) const;
    double evaluate_double(const std::map<int, double>& var_values,
                           const std::map<SymbolId, double>& param_values) const;

    void collect_param_symbols(std::set<SymbolId>& out) const;
    std::set<int> variable_positions() const;

    const std::map<Monomial, ParamRat, MonomialLess>& terms() const { return terms_; }

private:
    void add_term(const Monomial& m, const ParamRat& c);

    std::map<Monomial, ParamRat, MonomialLess> terms_;
};

}  // namespace polycert
