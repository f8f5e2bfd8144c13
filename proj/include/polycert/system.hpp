#pragma once

#include <vector>

#include "polycert/polynomial.hpp"

namespace polycert {

// Control system xdot = Phi(x, u) with polynomial right-hand sides and no
// free terms, so the origin is an equilibrium.
struct PolySystem {
    int n = 0;  // states
    int m = 0;  // inputs
    std::vector<Polynomial> rhs;  // Phi_1 .. Phi_n over states and inputs

    void validate() const;  // dimension and free-term checks
};

struct LyapunovSpec {
    Polynomial L;  // states only, L(0) = 0
};

}  // namespace polycert
