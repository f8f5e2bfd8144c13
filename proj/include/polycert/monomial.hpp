#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace polycert {

enum class Ordering { Less, Equal, Greater };

// Power product of positioned variables (states, and inputs while a system is
// still open loop). Entries are (position, exponent) with exponent > 0, kept
// sorted by position; the empty monomial is the constant 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, int>> entries);
    static Monomial variable(int position, int exponent = 1);

    bool is_constant() const { return entries_.empty(); }
    int degree() const;
    int exponent_of(int position) const;
    // Highest position with a nonzero exponent; 0 for the constant monomial.
    int top_position() const;
    // True when every variable present has position <= bound.
    bool within_positions(int bound) const;
    // Exponents as a dense vector of the given length (1-based positions).
    std::vector<int> exponent_vector(int n) const;

    Monomial times(const Monomial& other) const;
    Monomial pow(int k) const;
    // Monomial with the given position removed.
    Monomial without(int position) const;

    const std::vector<std::pair<int, int>>& entries() const { return entries_; }

    bool operator==(const Monomial& other) const { return entries_ == other.entries_; }

    // The ordering used everywhere: a monomial is below another when its top
    // variable has a lower position, or the same position with a smaller
    // exponent; exact ties recurse on the monomials with that variable
    // stripped. The constant monomial is the unique minimum.
    static Ordering compare(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<int, int>> entries_;
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) == Ordering::Less;
    }
};

inline bool operator<(const Monomial& a, const Monomial& b) {
    return Monomial::compare(a, b) == Ordering::Less;
}

}  // namespace polycert
