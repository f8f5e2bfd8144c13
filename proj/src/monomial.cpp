#include "polycert/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace polycert {

Monomial::Monomial(std::vector<std::pair<int, int>> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    std::vector<std::pair<int, int>> merged;
    for (const auto& [pos, exp] : entries_) {
        if (pos < 1) throw std::invalid_argument("variable positions are 1-based");
        if (exp < 0) throw std::invalid_argument("negative exponent in monomial");
        if (exp == 0) continue;
        if (!merged.empty() && merged.back().first == pos)
            merged.back().second += exp;
        else
            merged.emplace_back(pos, exp);
    }
    entries_ = std::move(merged);
}

Monomial Monomial::variable(int position, int exponent) {
    return Monomial({{position, exponent}});
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [pos, exp] : entries_) d += exp;
    return d;
}

int Monomial::exponent_of(int position) const {
    for (const auto& [pos, exp] : entries_)
        if (pos == position) return exp;
    return 0;
}

int Monomial::top_position() const {
    return entries_.empty() ? 0 : entries_.back().first;
}

bool Monomial::within_positions(int bound) const {
    return entries_.empty() || entries_.back().first <= bound;
}

std::vector<int> Monomial::exponent_vector(int n) const {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    for (const auto& [pos, exp] : entries_) {
        if (pos > n) throw std::out_of_range("monomial exceeds variable count");
        v[static_cast<std::size_t>(pos - 1)] = exp;
    }
    return v;
}

Monomial Monomial::times(const Monomial& other) const {
    std::vector<std::pair<int, int>> all = entries_;
    all.insert(all.end(), other.entries_.begin(), other.entries_.end());
    return Monomial(std::move(all));
}

Monomial Monomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative monomial power");
    std::vector<std::pair<int, int>> scaled;
    if (k > 0)
        for (const auto& [pos, exp] : entries_) scaled.emplace_back(pos, exp * k);
    return Monomial(std::move(scaled));
}

Monomial Monomial::without(int position) const {
    std::vector<std::pair<int, int>> rest;
    for (const auto& [pos, exp] : entries_)
        if (pos != position) rest.emplace_back(pos, exp);
    Monomial m;
    m.entries_ = std::move(rest);
    return m;
}

Ordering Monomial::compare(const Monomial& a, const Monomial& b) {
    // Walk both entry lists from the highest position down.
    auto ia = a.entries_.rbegin();
    auto ib = b.entries_.rbegin();
    while (ia != a.entries_.rend() && ib != b.entries_.rend()) {
        if (ia->first != ib->first)
            return ia->first < ib->first ? Ordering::Less : Ordering::Greater;
        if (ia->second != ib->second)
            return ia->second < ib->second ? Ordering::Less : Ordering::Greater;
        ++ia;
        ++ib;
    }
    if (ia != a.entries_.rend()) return Ordering::Greater;
    if (ib != b.entries_.rend()) return Ordering::Less;
    return Ordering::Equal;
}

}  // namespace polycert
