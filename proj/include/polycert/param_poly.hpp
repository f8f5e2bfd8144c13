#pragma once

#include <map>
#include <set>
#include <vector>

#include "polycert/rational.hpp"
#include "polycert/symbols.hpp"

namespace polycert {

// Power product of parameter symbols (W's, feedback coefficients, plant
// constants). Sorted by symbol id; empty = 1.
class ParamMonomial {
public:
    ParamMonomial() = default;
    explicit ParamMonomial(std::vector<std::pair<SymbolId, int>> entries);
    static ParamMonomial symbol(SymbolId id, int exponent = 1);

    bool is_constant() const { return entries_.empty(); }
    int degree() const;
    int exponent_of(SymbolId id) const;
    ParamMonomial times(const ParamMonomial& other) const;
    ParamMonomial without(SymbolId id) const;

    const std::vector<std::pair<SymbolId, int>>& entries() const { return entries_; }

    bool operator==(const ParamMonomial& other) const { return entries_ == other.entries_; }
    bool operator<(const ParamMonomial& other) const;

private:
    std::vector<std::pair<SymbolId, int>> entries_;
};

// Polynomial over the parameters with exact rational coefficients. Terms are
// kept as a vector sorted ascending in the monomial order with no zero
// coefficients, so addition is a merge and multiplying by one monomial is an
// order-preserving shift.
class ParamPoly {
public:
    using Term = std::pair<ParamMonomial, Rational>;

    ParamPoly() = default;
    explicit ParamPoly(const Rational& constant);
    static ParamPoly constant(const Rational& value);
    static ParamPoly symbol(SymbolId id);
    static ParamPoly term(const ParamMonomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Valid only when is_constant(); zero polynomial yields 0.
    Rational constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const;

    ParamPoly operator+(const ParamPoly& other) const;
    ParamPoly operator-(const ParamPoly& other) const;
    ParamPoly operator*(const ParamPoly& other) const;
    ParamPoly operator-() const;
    ParamPoly scaled(const Rational& c) const;
    ParamPoly pow(int k) const;
    // Steal both operands; the workhorse of the hot reduction loop.
    void add_in_place(ParamPoly&& other);
    void sub_in_place(ParamPoly&& other);

    bool operator==(const ParamPoly& other) const { return terms_ == other.terms_; }

    int degree_in(SymbolId id) const;
    // Decomposition sum_k coeff[k] * id^k; keys with zero polys omitted.
    std::map<int, ParamPoly> coefficients_in(SymbolId id) const;
    void collect_symbols(std::set<SymbolId>& out) const;
    std::set<SymbolId> symbols() const;
    bool mentions(SymbolId id) const { return degree_in(id) > 0; }

    ParamPoly substituted(const std::map<SymbolId, ParamPoly>& bindings) const;
    Rational evaluate(const std::map<SymbolId, Rational>& values) const;
    double evaluate_double(const std::map<SymbolId, double>& values) const;

    // gcd of coefficient numerators over lcm of denominators; 0 for zero poly.
    Rational content() const;
    // Sign of the coefficient of the largest parameter monomial; 0 when zero.
    int leading_sign() const;
    // Exact division; returns false when the divisor does not divide evenly.
    static bool try_divide(const ParamPoly& num, const ParamPoly& den, ParamPoly& quot);
    // gcd of two polynomials univariate in the same symbol, monic-normalized;
    // returns 1 when either is constant.
    static ParamPoly gcd_univariate(const ParamPoly& a, const ParamPoly& b, SymbolId sym);
    // Largest parameter monomial dividing every term.
    ParamMonomial monomial_content() const;
    ParamPoly divided_by_monomial(const ParamMonomial& m) const;

    const std::vector<Term>& terms() const { return terms_; }

private:
    // terms_ stays sorted ascending with nonzero coefficients.
    static ParamPoly merged(const ParamPoly& a, const ParamPoly& b, bool subtract);
    static ParamPoly merged_move(ParamPoly&& a, ParamPoly&& b, bool subtract);
    ParamPoly shifted(const ParamMonomial& m, const Rational& c) const;

    std::vector<Term> terms_;
};

}  // namespace polycert
