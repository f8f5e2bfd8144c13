#include "polycert/param_rat.hpp"

#include <stdexcept>

namespace polycert {

ParamRat::ParamRat(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator in rational function");
    normalize();
}

void ParamRat::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPoly(Rational(1));
        return;
    }
    if (den_.is_constant()) {
        Rational d = den_.constant_value();
        if (d != 1) {
            num_ = num_.scaled(Rational(1) / d);
            den_ = ParamPoly(Rational(1));
        }
        return;
    }
    // Cancel a shared parameter-monomial factor.
    ParamMonomial mc_num = num_.monomial_content();
    ParamMonomial mc_den = den_.monomial_content();
    if (!mc_num.is_constant() && !mc_den.is_constant()) {
        std::vector<std::pair<SymbolId, int>> shared;
        for (const auto& [id, exp] : mc_num.entries()) {
            int other = mc_den.exponent_of(id);
            if (other > 0) shared.emplace_back(id, std::min(exp, other));
        }
        if (!shared.empty()) {
            ParamMonomial g(std::move(shared));
            num_ = num_.divided_by_monomial(g);
            den_ = den_.divided_by_monomial(g);
        }
    }
    // Collapse exact quotients.
    ParamPoly q;
    if (ParamPoly::try_divide(num_, den_, q)) {
        num_ = std::move(q);
        den_ = ParamPoly(Rational(1));
        return;
    }
    // One-symbol denominator: cancel its gcd with the numerator's
    // coefficient polynomials in that symbol.
    std::set<SymbolId> den_syms = den_.symbols();
    if (den_syms.size() == 1) {
        SymbolId s = *den_syms.begin();
        std::map<ParamMonomial, ParamPoly> buckets;
        for (const auto& [m, c] : num_.terms()) {
            ParamMonomial rest = m.without(s);
            buckets[rest] =
                buckets[rest] + ParamPoly::term(ParamMonomial::symbol(s, m.exponent_of(s)), c);
        }
        ParamPoly g = den_;
        for (const auto& [rest, u] : buckets) {
            g = ParamPoly::gcd_univariate(g, u, s);
            if (g.is_constant()) break;
        }
        if (!g.is_constant()) {
            ParamPoly qn, qd;
            if (ParamPoly::try_divide(num_, g, qn) && ParamPoly::try_divide(den_, g, qd)) {
                num_ = std::move(qn);
                den_ = std::move(qd);
                if (den_.is_constant()) {
                    num_ = num_.scaled(Rational(1) / den_.constant_value());
                    den_ = ParamPoly(Rational(1));
                    return;
                }
            }
        }
    }
    // Scale so the denominator has content 1 and positive leading sign.
    Rational cd = den_.content();
    if (cd != 0) {
        Rational scale = Rational(1) / cd;
        if (den_.leading_sign() < 0) scale = -scale;
        num_ = num_.scaled(scale);
        den_ = den_.scaled(scale);
    }
}

Rational ParamRat::constant_value() const {
    if (!is_constant()) throw std::logic_error("rational function is not constant");
    if (num_.is_zero()) return Rational(0);
    return num_.constant_value() / den_.constant_value();
}

ParamRat ParamRat::operator+(const ParamRat& other) const {
    if (is_polynomial() && other.is_polynomial()) {
        ParamRat out;
        out.num_ = num_ + other.num_;
        return out;
    }
    return ParamRat(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

ParamRat ParamRat::operator-(const ParamRat& other) const {
    if (is_polynomial() && other.is_polynomial()) {
        ParamRat out;
        out.num_ = num_ - other.num_;
        return out;
    }
    return ParamRat(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

ParamRat ParamRat::operator*(const ParamRat& other) const {
    if (is_polynomial() && other.is_polynomial()) {
        ParamRat out;
        out.num_ = num_ * other.num_;
        return out;
    }
    return ParamRat(num_ * other.num_, den_ * other.den_);
}

void ParamRat::sub_in_place(ParamRat&& other) {
    if (is_polynomial() && other.is_polynomial()) {
        num_.sub_in_place(std::move(other.num_));
        return;
    }
    *this = *this - other;
}

ParamRat ParamRat::operator/(const ParamRat& other) const {
    if (other.is_zero()) throw std::invalid_argument("division by zero rational function");
    return ParamRat(num_ * other.den_, den_ * other.num_);
}

ParamRat ParamRat::operator-() const {
    ParamRat out = *this;
    out.num_ = -out.num_;
    return out;
}

ParamRat ParamRat::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power of rational function");
    ParamRat acc{Rational(1)};
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

bool ParamRat::operator==(const ParamRat& other) const {
    if (is_polynomial() && other.is_polynomial()) return (num_ - other.num_).is_zero();
    return (num_ * other.den_ - other.num_ * den_).is_zero();
}

std::set<SymbolId> ParamRat::symbols() const {
    std::set<SymbolId> out;
    collect_symbols(out);
    return out;
}

void ParamRat::collect_symbols(std::set<SymbolId>& out) const {
    num_.collect_symbols(out);
    den_.collect_symbols(out);
}

bool ParamRat::mentions(SymbolId id) const {
    return num_.mentions(id) || den_.mentions(id);
}

ParamRat substitute(const ParamPoly& poly, const std::map<SymbolId, ParamRat>& bindings) {
    ParamRat out{Rational(0)};
    for (const auto& [m, c] : poly.terms()) {
        ParamRat prod{c};
        for (const auto& [id, exp] : m.entries()) {
            auto it = bindings.find(id);
            ParamRat base = it != bindings.end() ? it->second : ParamRat::symbol(id);
            prod = prod * base.pow(exp);
        }
        out = out + prod;
    }
    return out;
}

ParamRat ParamRat::substituted(const std::map<SymbolId, ParamRat>& bindings) const {
    bool touched = false;
    for (const auto& [id, value] : bindings)
        if (mentions(id)) {
            touched = true;
            break;
        }
    if (!touched) return *this;
    ParamRat n = substitute(num_, bindings);
    ParamRat d = substitute(den_, bindings);
    if (d.is_zero())
        throw std::domain_error("substitution vanishes a denominator");
    return n / d;
}

Rational ParamRat::evaluate(const std::map<SymbolId, Rational>& values) const {
    Rational d = den_.evaluate(values);
    if (d == 0) throw std::domain_error("parameter assignment vanishes a denominator");
    return num_.evaluate(values) / d;
}

double ParamRat::evaluate_double(const std::map<SymbolId, double>& values) const {
    double d = den_.evaluate_double(values);
    if (d == 0.0) throw std::domain_error("parameter assignment vanishes a denominator");
    return num_.evaluate_double(values) / d;
}

}  // namespace polycert
