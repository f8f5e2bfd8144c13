#include "polycert/polynomial.hpp"

#include <stdexcept>

namespace polycert {

Polynomial Polynomial::constant(const ParamRat& c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(Monomial{}, c);
    return p;
}

Polynomial Polynomial::variable(int position, int exponent) {
    Polynomial p;
    p.terms_.emplace(Monomial::variable(position, exponent), ParamRat{Rational(1)});
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const ParamRat& c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::depends_only_on(int position) const {
    for (const auto& [m, c] : terms_) {
        for (const auto& [pos, exp] : m.entries())
            if (pos != position) return false;
    }
    return true;
}

bool Polynomial::has_variables_above(int bound) const {
    for (const auto& [m, c] : terms_)
        if (!m.within_positions(bound)) return true;
    return false;
}

ParamRat Polynomial::coefficient_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ParamRat{} : it->second;
}

std::pair<ParamRat, Monomial> Polynomial::maxterm() const {
    if (terms_.empty()) throw std::domain_error("empty polynomial has no maxterm");
    const auto& top = *terms_.rbegin();
    return {top.second, top.first};
}

void Polynomial::add_term(const Monomial& m, const ParamRat& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
    return out;
}

void Polynomial::sub_in_place(Polynomial&& other) {
    for (auto& [m, c] : other.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            ParamRat neg = -std::move(c);
            if (!neg.is_zero()) terms_.emplace(m, std::move(neg));
            continue;
        }
        it->second.sub_in_place(std::move(c));
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::scaled(const ParamRat& c) const {
    Polynomial out;
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) {
        ParamRat v = coeff * c;
        if (!v.is_zero()) out.terms_.emplace(m, v);
    }
    return out;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial acc = Polynomial::constant(ParamRat{Rational(1)});
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first)) return false;
        if (it->second != jt->second) return false;
    }
    return true;
}

Polynomial Polynomial::substituted_vars(const std::map<int, Polynomial>& bindings) const {
    for (const auto& [pos, repl] : bindings)
        if (repl.variable_positions().count(pos))
            throw std::invalid_argument("replacement contains the substituted variable");
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial prod = Polynomial::constant(c);
        for (const auto& [pos, exp] : m.entries()) {
            auto it = bindings.find(pos);
            if (it == bindings.end()) {
                prod = prod * Polynomial::variable(pos, exp);
            } else {
                prod = prod * it->second.pow(exp);
            }
        }
        out = out + prod;
    }
    return out;
}

Polynomial Polynomial::substituted_params(const std::map<SymbolId, ParamRat>& bindings) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.add_term(m, c.substituted(bindings));
    return out;
}

Polynomial Polynomial::partial_derivative(int position) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent_of(position);
        if (e == 0) continue;
        Monomial reduced = m.without(position);
        if (e > 1) reduced = reduced.times(Monomial::variable(position, e - 1));
        out.add_term(reduced, c * ParamRat{Rational(e)});
    }
    return out;
}

Rational Polynomial::evaluate(const std::map<int, Rational>& var_values,
                              const std::map<SymbolId, Rational>& param_values) const {
    std::string missing;
    for (int pos : variable_positions())
        if (!var_values.count(pos))
            missing += (missing.empty() ? "" : ", ") + std::to_string(pos);
    if (!missing.empty())
        throw std::invalid_argument("unbound variables at positions: " + missing);
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational prod = c.evaluate(param_values);
        for (const auto& [pos, exp] : m.entries()) {
            const Rational& v = var_values.at(pos);
            for (int i = 0; i < exp; ++i) prod *= v;
        }
        acc += prod;
    }
    return acc;
}

double Polynomial::evaluate_double(const std::map<int, double>& var_values,
                                   const std::map<SymbolId, double>& param_values) const {
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double prod = c.evaluate_double(param_values);
        for (const auto& [pos, exp] : m.entries()) {
            auto it = var_values.find(pos);
            if (it == var_values.end())
                throw std::invalid_argument("unbound variable at position " + std::to_string(pos));
            for (int i = 0; i < exp; ++i) prod *= it->second;
        }
        acc += prod;
    }
    return acc;
}

void Polynomial::collect_param_symbols(std::set<SymbolId>& out) const {
    for (const auto& [m, c] : terms_) c.collect_symbols(out);
}

std::set<int> Polynomial::variable_positions() const {
    std::set<int> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [pos, exp] : m.entries()) out.insert(pos);
    return out;
}

}  // namespace polycert
