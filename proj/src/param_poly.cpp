#include "polycert/param_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace polycert {

ParamMonomial::ParamMonomial(std::vector<std::pair<SymbolId, int>> entries)
    : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    std::vector<std::pair<SymbolId, int>> merged;
    for (const auto& [id, exp] : entries_) {
        if (exp < 0) throw std::invalid_argument("negative parameter exponent");
        if (exp == 0) continue;
        if (!merged.empty() && merged.back().first == id)
            merged.back().second += exp;
        else
            merged.emplace_back(id, exp);
    }
    entries_ = std::move(merged);
}

ParamMonomial ParamMonomial::symbol(SymbolId id, int exponent) {
    return ParamMonomial({{id, exponent}});
}

int ParamMonomial::degree() const {
    int d = 0;
    for (const auto& [id, exp] : entries_) d += exp;
    return d;
}

int ParamMonomial::exponent_of(SymbolId id) const {
    for (const auto& [sid, exp] : entries_)
        if (sid == id) return exp;
    return 0;
}

ParamMonomial ParamMonomial::times(const ParamMonomial& other) const {
    // Merge two sorted entry lists.
    ParamMonomial out;
    out.entries_.reserve(entries_.size() + other.entries_.size());
    auto ia = entries_.begin(), ib = other.entries_.begin();
    while (ia != entries_.end() || ib != other.entries_.end()) {
        if (ib == other.entries_.end() || (ia != entries_.end() && ia->first < ib->first)) {
            out.entries_.push_back(*ia++);
        } else if (ia == entries_.end() || ib->first < ia->first) {
            out.entries_.push_back(*ib++);
        } else {
            out.entries_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

ParamMonomial ParamMonomial::without(SymbolId id) const {
    std::vector<std::pair<SymbolId, int>> rest;
    rest.reserve(entries_.size());
    for (const auto& [sid, exp] : entries_)
        if (sid != id) rest.emplace_back(sid, exp);
    ParamMonomial m;
    m.entries_ = std::move(rest);
    return m;
}

// Graded order, ties by lexicographic exponent comparison with lower symbol
// ids taking precedence. Admissible, so it is compatible with multiplication
// and leading-term division terminates.
bool ParamMonomial::operator<(const ParamMonomial& other) const {
    int da = degree(), db = other.degree();
    if (da != db) return da < db;
    auto ia = entries_.begin(), ib = other.entries_.begin();
    while (ia != entries_.end() && ib != other.entries_.end()) {
        if (ia->first != ib->first) {
            // The monomial holding the smaller id is lex-greater.
            return ia->first > ib->first;
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return ia == entries_.end() && ib != other.entries_.end();
}

ParamPoly::ParamPoly(const Rational& constant) {
    if (constant != 0) terms_.emplace_back(ParamMonomial{}, constant);
}

ParamPoly ParamPoly::constant(const Rational& value) { return ParamPoly(value); }

ParamPoly ParamPoly::symbol(SymbolId id) {
    ParamPoly p;
    p.terms_.emplace_back(ParamMonomial::symbol(id), Rational(1));
    return p;
}

ParamPoly ParamPoly::term(const ParamMonomial& m, const Rational& c) {
    ParamPoly p;
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_constant());
}

Rational ParamPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("parameter polynomial is not constant");
    return terms_.front().second;
}

int ParamPoly::total_degree() const {
    // Graded order: the last term carries the maximal degree.
    return terms_.empty() ? 0 : terms_.back().first.degree();
}

ParamPoly ParamPoly::merged(const ParamPoly& a, const ParamPoly& b, bool subtract) {
    ParamPoly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
            out.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->first < ia->first) {
            out.terms_.emplace_back(ib->first, subtract ? Rational(-ib->second) : ib->second);
            ++ib;
        } else {
            Rational c = subtract ? Rational(ia->second - ib->second)
                                  : Rational(ia->second + ib->second);
            if (c != 0) out.terms_.emplace_back(ia->first, std::move(c));
            ++ia;
            ++ib;
        }
    }
    return out;
}

ParamPoly ParamPoly::merged_move(ParamPoly&& a, ParamPoly&& b, bool subtract) {
    ParamPoly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
            out.terms_.push_back(std::move(*ia++));
        } else if (ia == a.terms_.end() || ib->first < ia->first) {
            if (subtract) ib->second = -ib->second;
            out.terms_.push_back(std::move(*ib++));
        } else {
            Rational c = subtract ? Rational(ia->second - ib->second)
                                  : Rational(ia->second + ib->second);
            if (c != 0) out.terms_.emplace_back(std::move(ia->first), std::move(c));
            ++ia;
            ++ib;
        }
    }
    return out;
}

void ParamPoly::add_in_place(ParamPoly&& other) {
    if (other.terms_.empty()) return;
    if (terms_.empty()) {
        terms_ = std::move(other.terms_);
        return;
    }
    *this = merged_move(std::move(*this), std::move(other), false);
}

void ParamPoly::sub_in_place(ParamPoly&& other) {
    if (other.terms_.empty()) return;
    *this = merged_move(std::move(*this), std::move(other), true);
}

ParamPoly ParamPoly::operator+(const ParamPoly& other) const {
    if (terms_.empty()) return other;
    if (other.terms_.empty()) return *this;
    return merged(*this, other, false);
}

ParamPoly ParamPoly::operator-(const ParamPoly& other) const {
    if (other.terms_.empty()) return *this;
    return merged(*this, other, true);
}

// Multiplying every monomial by the same monomial preserves the order.
ParamPoly ParamPoly::shifted(const ParamMonomial& m, const Rational& c) const {
    ParamPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& [tm, tc] : terms_) {
        Rational v = tc * c;
        if (v != 0) out.terms_.emplace_back(tm.times(m), std::move(v));
    }
    return out;
}

ParamPoly ParamPoly::operator*(const ParamPoly& other) const {
    if (terms_.empty() || other.terms_.empty()) return ParamPoly{};
    const ParamPoly& small = terms_.size() <= other.terms_.size() ? *this : other;
    const ParamPoly& large = terms_.size() <= other.terms_.size() ? other : *this;
    ParamPoly acc;
    for (const auto& [m, c] : small.terms_) acc.add_in_place(large.shifted(m, c));
    return acc;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.terms_.emplace_back(m, Rational(-c));
    return out;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
    if (c == 0) return ParamPoly{};
    if (c == 1) return *this;
    ParamPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& [m, coeff] : terms_) out.terms_.emplace_back(m, Rational(coeff * c));
    return out;
}

ParamPoly ParamPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    ParamPoly acc = ParamPoly(Rational(1));
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

int ParamPoly::degree_in(SymbolId id) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(id));
    return d;
}

std::map<int, ParamPoly> ParamPoly::coefficients_in(SymbolId id) const {
    std::map<int, std::vector<Term>> buckets;
    for (const auto& [m, c] : terms_) buckets[m.exponent_of(id)].emplace_back(m.without(id), c);
    std::map<int, ParamPoly> out;
    for (auto& [k, terms] : buckets) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        ParamPoly p;
        for (auto& [m, c] : terms) {
            if (!p.terms_.empty() && p.terms_.back().first == m)
                p.terms_.back().second += c;
            else
                p.terms_.emplace_back(std::move(m), std::move(c));
        }
        p.terms_.erase(std::remove_if(p.terms_.begin(), p.terms_.end(),
                                      [](const Term& t) { return t.second == 0; }),
                       p.terms_.end());
        if (!p.is_zero()) out.emplace(k, std::move(p));
    }
    return out;
}

void ParamPoly::collect_symbols(std::set<SymbolId>& out) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [id, exp] : m.entries()) out.insert(id);
}

std::set<SymbolId> ParamPoly::symbols() const {
    std::set<SymbolId> out;
    collect_symbols(out);
    return out;
}

ParamPoly ParamPoly::substituted(const std::map<SymbolId, ParamPoly>& bindings) const {
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
        ParamPoly prod = ParamPoly(c);
        for (const auto& [id, exp] : m.entries()) {
            auto it = bindings.find(id);
            ParamPoly base = it != bindings.end() ? it->second : ParamPoly::symbol(id);
            prod = prod * base.pow(exp);
        }
        out = out + prod;
    }
    return out;
}

Rational ParamPoly::evaluate(const std::map<SymbolId, Rational>& values) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational prod = c;
        for (const auto& [id, exp] : m.entries()) {
            auto it = values.find(id);
            if (it == values.end())
                throw std::invalid_argument("unbound parameter in evaluation");
            for (int i = 0; i < exp; ++i) prod *= it->second;
        }
        acc += prod;
    }
    return acc;
}

double ParamPoly::evaluate_double(const std::map<SymbolId, double>& values) const {
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double prod = rational_to_double(c);
        for (const auto& [id, exp] : m.entries()) {
            auto it = values.find(id);
            if (it == values.end())
                throw std::invalid_argument("unbound parameter in evaluation");
            for (int i = 0; i < exp; ++i) prod *= it->second;
        }
        acc += prod;
    }
    return acc;
}

Rational ParamPoly::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    return content;
}

int ParamPoly::leading_sign() const {
    if (terms_.empty()) return 0;
    return rational_sign(terms_.back().second);
}

bool ParamPoly::try_divide(const ParamPoly& num, const ParamPoly& den, ParamPoly& quot) {
    if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
    ParamPoly q, rem = num;
    const Term& lead = den.terms_.back();
    while (!rem.is_zero()) {
        const Term& top = rem.terms_.back();
        // Leading monomial of the remainder must be divisible.
        std::vector<std::pair<SymbolId, int>> diff;
        bool divisible = true;
        {
            auto const& a = top.first.entries();
            auto const& b = lead.first.entries();
            std::size_t j = 0;
            for (const auto& [id, exp] : b) {
                while (j < a.size() && a[j].first < id) ++j;
                if (j >= a.size() || a[j].first != id || a[j].second < exp) {
                    divisible = false;
                    break;
                }
            }
            if (divisible) {
                std::map<SymbolId, int> exps;
                for (const auto& [id, exp] : a) exps[id] = exp;
                for (const auto& [id, exp] : b) exps[id] -= exp;
                for (const auto& [id, exp] : exps)
                    if (exp > 0) diff.emplace_back(id, exp);
            }
        }
        if (!divisible) return false;
        ParamMonomial factor(std::move(diff));
        Rational scale = top.second / lead.second;
        q = q + ParamPoly::term(factor, scale);
        rem.sub_in_place(den.shifted(factor, scale));
    }
    quot = std::move(q);
    return true;
}

ParamPoly ParamPoly::gcd_univariate(const ParamPoly& a, const ParamPoly& b, SymbolId sym) {
    auto to_coeffs = [&](const ParamPoly& p) {
        std::map<int, Rational> out;
        for (const auto& [m, c] : p.terms()) {
            if (!(m.without(sym) == ParamMonomial{}))
                throw std::invalid_argument("polynomial is not univariate");
            out[m.exponent_of(sym)] = c;
        }
        return out;
    };
    auto degree = [](const std::map<int, Rational>& p) {
        return p.empty() ? -1 : p.rbegin()->first;
    };
    std::map<int, Rational> u = to_coeffs(a), v = to_coeffs(b);
    if (degree(u) < degree(v)) std::swap(u, v);
    while (!v.empty()) {
        std::map<int, Rational> r = u;
        int dv = degree(v);
        Rational lv = v.rbegin()->second;
        while (degree(r) >= dv) {
            int dr = degree(r);
            Rational scale = r.rbegin()->second / lv;
            for (const auto& [k, c] : v) {
                Rational& slot = r[k + dr - dv];
                slot -= scale * c;
                if (slot == 0) r.erase(k + dr - dv);
            }
        }
        u = std::move(v);
        v = std::move(r);
    }
    if (u.empty() || degree(u) == 0) return ParamPoly(Rational(1));
    Rational lead = u.rbegin()->second;
    ParamPoly g;
    for (const auto& [k, c] : u)
        g = g + ParamPoly::term(ParamMonomial::symbol(sym, k), Rational(c / lead));
    return g;
}

ParamMonomial ParamPoly::monomial_content() const {
    if (terms_.empty()) return ParamMonomial{};
    std::map<SymbolId, int> mins;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            for (const auto& [id, exp] : m.entries()) mins[id] = exp;
            first = false;
            continue;
        }
        for (auto it = mins.begin(); it != mins.end();) {
            int e = m.exponent_of(it->first);
            if (e == 0)
                it = mins.erase(it);
            else {
                it->second = std::min(it->second, e);
                ++it;
            }
        }
        if (mins.empty()) break;
    }
    std::vector<std::pair<SymbolId, int>> entries(mins.begin(), mins.end());
    return ParamMonomial(std::move(entries));
}

ParamPoly ParamPoly::divided_by_monomial(const ParamMonomial& m) const {
    if (m.is_constant()) return *this;
    ParamPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& [tm, c] : terms_) {
        std::map<SymbolId, int> exps;
        for (const auto& [id, exp] : tm.entries()) exps[id] = exp;
        for (const auto& [id, exp] : m.entries()) {
            exps[id] -= exp;
            if (exps[id] < 0) throw std::logic_error("monomial content division failed");
        }
        std::vector<std::pair<SymbolId, int>> entries;
        for (const auto& [id, exp] : exps)
            if (exp > 0) entries.emplace_back(id, exp);
        out.terms_.emplace_back(ParamMonomial(std::move(entries)), c);
    }
    // Dividing by the common content keeps relative order intact.
    return out;
}

}  // namespace polycert
