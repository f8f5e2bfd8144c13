#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polycert/formal_factor.hpp"

namespace polycert {

// Coefficients of the factorization split by exponent parity: a coefficient
// is odd when some exponent of its term is odd. Factor coefficients come
// first (mu = 1..k), then remainder coefficients by descending power of x_1
// (mu = k+1..k+h).
struct ParityClassification {
    struct Entry {
        std::size_t mu = 0;  // 1-based
        ParamRat coefficient;
        bool odd = false;
        bool from_remainder = false;
        int remainder_power = 0;  // only for remainder entries
    };
    std::vector<Entry> entries;

    std::vector<const Entry*> odd_set() const;
    std::vector<const Entry*> even_set() const;
};

struct Constraint {
    enum class Rel { Ge, Gt, Ne };
    ParamRat expr;
    Rel rel = Rel::Ge;
};

// Parameter equalities, sign and nonvanishing constraints, remaining free
// parameters, and (when numeric) a witness assignment satisfying everything.
struct SolutionSet {
    // Solve order; after finalization every right-hand side mentions only
    // free parameters or plant constants.
    std::vector<std::pair<SymbolId, ParamRat>> equalities;
    std::vector<Constraint> inequalities;
    std::vector<SymbolId> free_params;
    std::optional<std::map<SymbolId, Rational>> witness;

    std::map<SymbolId, ParamRat> equality_bindings() const;
    std::optional<ParamRat> solved_value(SymbolId id) const;
};

struct SosComponent {
    Polynomial form;   // linear-like form or the bare x_1
    int exponent = 0;  // even, > 0
};

struct SosTerm {
    ParamRat coefficient;  // nonnegative under the solution set's constraints
    std::vector<SosComponent> components;
};

struct SumOfSquares {
    std::vector<SosTerm> terms;

    Polynomial expand() const;
    SumOfSquares substituted_params(const std::map<SymbolId, ParamRat>& bindings) const;
};

struct SolveOptions {
    std::size_t branch_cap = 256;
    unsigned seed = 0;
    int random_witness_attempts = 200;
};

struct Certificate {
    FormalFactorization factorization;
    SolutionSet solution;
    SumOfSquares sos;
    bool strict_definite = false;
};

struct PosOutcome {
    std::optional<Certificate> certificate;
    std::string reason;  // set when no certificate was found

    bool ok() const { return certificate.has_value(); }
};

ParityClassification classify(const FormalFactorization& f);

// Sequential elimination: process the odd set in factorization order; solve
// each coefficient for a parameter in which it is affine (preferring the
// factorization's own W parameters, then constant cofactors), substitute the
// solution downstream, and record non-constant cofactors as nonvanishing side
// conditions. Coefficients affine in no parameter trigger bounded branching
// over small candidate values. Returns nothing when no branch annihilates the
// odd set; that outcome means "no certificate found", not "not positive".
std::optional<SolutionSet> solve(const FormalFactorization& f, const ParityClassification& cls,
                                 const std::set<SymbolId>& decision_params,
                                 const SymbolTable& table, const SolveOptions& options = {});

// Applies the equalities, drops vanished terms and renders what is left as
// weighted products of even powers. Throws if an odd-exponent term survives.
SumOfSquares extract_sos(const FormalFactorization& f, const SolutionSet& s);

PosOutcome pos_check(const Polynomial& p, SymbolTable& table,
                     const std::set<SymbolId>& extra_decision_params = {},
                     const SolveOptions& options = {});

struct WitnessReport {
    bool expansion_matches = false;
    bool samples_nonnegative = false;
    double min_sample_value = 0.0;
    std::optional<std::vector<double>> counterexample;

    bool ok() const { return expansion_matches && samples_nonnegative; }
};

// Independent numeric check of a certificate: re-expands the sum of squares
// under the witness and compares exactly against p, then samples p at random
// state points asserting values >= -1e-9.
WitnessReport verify_witness(const Polynomial& p, const Certificate& cert,
                             const SymbolTable& table, int samples = 1000, unsigned seed = 0);

}  // namespace polycert
