#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycert/system.hpp"

namespace polycert {

// Polynomial flattened to doubles for the integrator hot loop.
struct CompiledPoly {
    struct Term {
        double coefficient;
        std::vector<std::pair<int, int>> powers;  // (0-based variable index, exponent)
    };
    std::vector<Term> terms;

    double eval(const std::vector<double>& vars) const;
};

// Requires fully numeric coefficients (witness already substituted).
CompiledPoly compile(const Polynomial& p);

struct SimTrace {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    std::vector<std::vector<double>> inputs;
    std::vector<double> lyapunov;
    bool diverged = false;
    std::string diagnostic;  // set when integration stopped early
};

struct SimOptions {
    double dt = 1e-3;
    double t_final = 20.0;
    double divergence_bound = 1e6;
};

// Classical fixed-step 4th-order Runge-Kutta on xdot = Phi(x, a(x)). Stops
// with a diagnostic when the state norm exceeds the divergence bound or a
// value becomes non-finite.
SimTrace simulate_closed_loop(const PolySystem& sys, const std::vector<Polynomial>& feedback,
                              const Polynomial& lyapunov, const std::vector<double>& x0,
                              const SimOptions& options = {});

struct DecreaseReport {
    bool ok = true;
    std::size_t first_violation = 0;
    double violation_amount = 0.0;
    double time = 0.0;
};

// Asserts L(t_{k+1}) <= L(t_k) + 1e-7 along the trace.
DecreaseReport check_decrease(const SimTrace& trace);

// Header t,x1,...,xn,u1,...,um,L; one row per step.
std::string trace_to_csv(const SimTrace& trace, const SymbolTable& table);

}  // namespace polycert
