#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycert/positivity.hpp"
#include "polycert/system.hpp"

namespace polycert {

// One monomial list per input; each monomial is a pure state power product of
// degree >= 1, so the closed loop keeps the origin an equilibrium.
using FeedbackTemplate = std::vector<std::vector<Monomial>>;

// Parametric laws u_j = sum of fresh coefficient symbols times the template
// monomials, plus (after synthesis) the constraints that make the Lyapunov
// derivative a certified sum of squares.
struct FeedbackFamily {
    std::vector<Polynomial> laws;         // one per input, coefficients are symbols
    std::vector<SymbolId> params;         // minting order
    FeedbackTemplate used_template;

    // Filled by synthesize:
    std::vector<Polynomial> constrained_laws;  // laws with solved equalities applied
    SolutionSet constraints;
    SumOfSquares sos;                          // certificate for V
    Polynomial lyapunov_derivative;            // V = -grad(L) . Phi(x, a(x))
    bool strict_definite = false;
    std::optional<std::vector<Polynomial>> witness_laws;  // numeric-coefficient laws
};

struct JacobianPair {
    std::vector<std::vector<ParamRat>> a;  // n x n, dPhi/dx at the origin
    std::vector<std::vector<ParamRat>> b;  // n x m, dPhi/du at the origin
};

// Dense template with every state monomial of total degree 1..degree.
FeedbackTemplate full_template(const SymbolTable& table, int degree);

// Mints one fresh coefficient symbol per template monomial. Slot letters
// follow A, B, G, D, ... per input, falling back to P<slot> beyond.
FeedbackFamily build_parametric_feedback(SymbolTable& table, const FeedbackTemplate& tmpl);
FeedbackFamily build_parametric_feedback(SymbolTable& table, int degree);

// V = -sum_i dL/dx_i * Phi_i(x, a(x)), fully expanded.
Polynomial lyapunov_derivative(const PolySystem& sys, const LyapunovSpec& lyap,
                               const std::vector<Polynomial>& laws, const SymbolTable& table);

JacobianPair linearize(const PolySystem& sys, const SymbolTable& table);

// Deterministic escalation: full linear template, then bilinear monomials
// mirroring the nonlinearities of the equations each input drives, then all
// cross products, then complete templates degree by degree up to the cap.
std::vector<FeedbackTemplate> suggest_templates(const PolySystem& sys, const SymbolTable& table,
                                                int max_degree);

struct SynthesisOutcome {
    std::optional<FeedbackFamily> family;
    std::string reason;

    bool ok() const { return family.has_value(); }
};

SynthesisOutcome synthesize(const PolySystem& sys, const LyapunovSpec& lyap,
                            const FeedbackTemplate& tmpl, SymbolTable& table,
                            const SolveOptions& options = {});

// Tries suggested templates in order; first success wins.
SynthesisOutcome synthesize_auto(const PolySystem& sys, const LyapunovSpec& lyap,
                                 SymbolTable& table, int max_degree,
                                 const SolveOptions& options = {});

// Default Lyapunov function: sum of squared states.
LyapunovSpec default_lyapunov(const SymbolTable& table);

}  // namespace polycert
