#pragma once

#include <map>
#include <set>

#include "polycert/param_poly.hpp"

namespace polycert {

// Element of the field of rational functions in the parameters. Kept in a
// canonical form: content-reduced numerator and denominator, denominator
// leading sign positive, common parameter-monomial factors cancelled, and an
// exact polynomial division attempted so that p*q/q collapses back to p.
// Zero testing therefore reduces to an empty numerator.
class ParamRat {
public:
    ParamRat() : num_(), den_(Rational(1)) {}
    ParamRat(const Rational& value) : num_(value), den_(Rational(1)) {}
    ParamRat(ParamPoly num) : num_(std::move(num)), den_(Rational(1)) {}
    ParamRat(ParamPoly num, ParamPoly den);
    static ParamRat symbol(SymbolId id) { return ParamRat(ParamPoly::symbol(id)); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;
    bool is_polynomial() const { return den_.is_constant(); }

    ParamRat operator+(const ParamRat& other) const;
    ParamRat operator-(const ParamRat& other) const;
    ParamRat operator*(const ParamRat& other) const;
    ParamRat operator/(const ParamRat& other) const;
    ParamRat operator-() const;
    ParamRat pow(int k) const;
    // Steals the argument when both sides are plain polynomials.
    void sub_in_place(ParamRat&& other);

    // a/b == c/d  iff  a*d - c*b expands to zero.
    bool operator==(const ParamRat& other) const;
    bool operator!=(const ParamRat& other) const { return !(*this == other); }

    std::set<SymbolId> symbols() const;
    void collect_symbols(std::set<SymbolId>& out) const;
    bool mentions(SymbolId id) const;

    ParamRat substituted(const std::map<SymbolId, ParamRat>& bindings) const;
    // Throws when the assignment vanishes the denominator.
    Rational evaluate(const std::map<SymbolId, Rational>& values) const;
    double evaluate_double(const std::map<SymbolId, double>& values) const;

private:
    void normalize();

    ParamPoly num_;
    ParamPoly den_;
};

// Substitute parameter values into a plain parameter polynomial; divisions in
// the values are what force the result into the fraction field.
ParamRat substitute(const ParamPoly& poly, const std::map<SymbolId, ParamRat>& bindings);

}  // namespace polycert
