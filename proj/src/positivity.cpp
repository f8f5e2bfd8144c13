#include "polycert/positivity.hpp"

#include <algorithm>
#include <random>

namespace polycert {

std::vector<const ParityClassification::Entry*> ParityClassification::odd_set() const {
    std::vector<const Entry*> out;
    for (const auto& e : entries)
        if (e.odd) out.push_back(&e);
    return out;
}

std::vector<const ParityClassification::Entry*> ParityClassification::even_set() const {
    std::vector<const Entry*> out;
    for (const auto& e : entries)
        if (!e.odd) out.push_back(&e);
    return out;
}

ParityClassification classify(const FormalFactorization& f) {
    ParityClassification cls;
    std::size_t mu = 0;
    for (const FactorTerm& t : f.factors) {
        ParityClassification::Entry e;
        e.mu = ++mu;
        e.coefficient = t.coefficient;
        e.odd = t.any_odd_exponent();
        cls.entries.push_back(std::move(e));
    }
    std::vector<std::pair<int, ParamRat>> rem;
    for (const auto& [m, c] : f.remainder.terms()) rem.emplace_back(m.exponent_of(1), c);
    std::sort(rem.begin(), rem.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [power, c] : rem) {
        ParityClassification::Entry e;
        e.mu = ++mu;
        e.coefficient = c;
        e.odd = power % 2 != 0;
        e.from_remainder = true;
        e.remainder_power = power;
        cls.entries.push_back(std::move(e));
    }
    return cls;
}

std::map<SymbolId, ParamRat> SolutionSet::equality_bindings() const {
    std::map<SymbolId, ParamRat> out;
    for (const auto& [s, v] : equalities) out.emplace(s, v);
    return out;
}

std::optional<ParamRat> SolutionSet::solved_value(SymbolId id) const {
    for (const auto& [s, v] : equalities)
        if (s == id) return v;
    return std::nullopt;
}

Polynomial SumOfSquares::expand() const {
    Polynomial acc;
    for (const SosTerm& t : terms) {
        Polynomial prod = Polynomial::constant(t.coefficient);
        for (const SosComponent& comp : t.components) prod = prod * comp.form.pow(comp.exponent);
        acc = acc + prod;
    }
    return acc;
}

SumOfSquares SumOfSquares::substituted_params(const std::map<SymbolId, ParamRat>& bindings) const {
    SumOfSquares out;
    for (const SosTerm& t : terms) {
        SosTerm nt;
        nt.coefficient = t.coefficient.substituted(bindings);
        if (nt.coefficient.is_zero()) continue;
        for (const SosComponent& comp : t.components)
            nt.components.push_back({comp.form.substituted_params(bindings), comp.exponent});
        out.terms.push_back(std::move(nt));
    }
    return out;
}

namespace {

bool is_decision_role(SymbolRole role) {
    return role == SymbolRole::WParam || role == SymbolRole::FeedbackParam;
}

struct SolveState {
    std::vector<ParamRat> coeffs;  // aligned with classification entries
    std::vector<std::pair<SymbolId, ParamRat>> equalities;
    std::vector<ParamRat> nonvanishing;
    std::set<SymbolId> solved;
};

struct AffineCandidate {
    SymbolId sym;
    ParamRat value;
    ParamPoly cofactor;
    // Ordering: W parameters before feedback parameters, constant cofactors
    // first, then structurally simpler cofactors; W's tie-break by minting
    // order, feedback parameters latest-first.
    std::tuple<int, int, std::size_t, int, long> key;
};

const std::vector<Rational>& guess_values() {
    static const std::vector<Rational> v = {
        Rational(0),      Rational(1),      Rational(-1),    Rational(1, 2),
        Rational(-1, 2),  Rational(2),      Rational(-2)};
    return v;
}

const std::vector<Rational>& witness_grid() {
    static const std::vector<Rational> v = {
        Rational(0),     Rational(1, 2),  Rational(-1, 2), Rational(1),  Rational(-1),
        Rational(2),     Rational(-2),    Rational(4),     Rational(-4)};
    return v;
}

class Searcher {
public:
    Searcher(const ParityClassification& cls, const std::set<SymbolId>& decision,
             const SymbolTable& table, const SolveOptions& opts)
        : cls_(cls), decision_(decision), table_(table), opts_(opts) {}

    std::optional<SolutionSet> run(std::string* diagnostics) {
        SolveState state;
        state.coeffs.reserve(cls_.entries.size());
        for (const auto& e : cls_.entries) state.coeffs.push_back(e.coefficient);
        auto result = dfs(state, 0);
        if (!result && diagnostics) *diagnostics = failure_reason_;
        return result;
    }

private:
    std::optional<SolutionSet> dfs(const SolveState& state, std::size_t entry_index) {
        while (entry_index < cls_.entries.size() &&
               (!cls_.entries[entry_index].odd || state.coeffs[entry_index].is_zero()))
            ++entry_index;
        if (entry_index >= cls_.entries.size()) return finalize(state);

        const ParamRat& coeff = state.coeffs[entry_index];
        const ParamPoly& numerator = coeff.num();

        std::vector<SymbolId> params;
        for (SymbolId s : numerator.symbols())
            if (decision_.count(s)) params.push_back(s);
        if (params.empty()) {
            note_failure("an odd coefficient contains no decision parameter");
            return std::nullopt;
        }

        std::vector<AffineCandidate> affine;
        for (SymbolId s : params) {
            if (numerator.degree_in(s) != 1) continue;
            auto parts = numerator.coefficients_in(s);
            ParamPoly alpha = parts.count(1) ? parts.at(1) : ParamPoly{};
            ParamPoly beta = parts.count(0) ? parts.at(0) : ParamPoly{};
            if (alpha.is_zero()) continue;
            AffineCandidate cand;
            cand.sym = s;
            cand.value = ParamRat(-beta, alpha);
            cand.cofactor = alpha;
            bool is_w = table_.role(s) == SymbolRole::WParam;
            long mint = is_w ? static_cast<long>(s) : -static_cast<long>(s);
            cand.key = {is_w ? 0 : 1, alpha.is_constant() ? 0 : 1, alpha.term_count(),
                        alpha.total_degree(), mint};
            affine.push_back(std::move(cand));
        }
        std::sort(affine.begin(), affine.end(),
                  [](const AffineCandidate& a, const AffineCandidate& b) { return a.key < b.key; });

        if (!affine.empty()) {
            for (const AffineCandidate& cand : affine) {
                if (!count_node()) return std::nullopt;
                SolveState next = state;
                const ParamPoly* side = cand.cofactor.is_constant() ? nullptr : &cand.cofactor;
                if (!apply(next, cand.sym, cand.value, side)) continue;
                if (auto result = dfs(next, entry_index + 1)) return result;
                if (cap_hit_) return std::nullopt;
            }
            return std::nullopt;
        }

        // No affine parameter: branch over small candidate values, then give
        // the (possibly now affine) coefficient another pass.
        std::sort(params.begin(), params.end(), [this](SymbolId a, SymbolId b) {
            bool wa = table_.role(a) == SymbolRole::WParam;
            bool wb = table_.role(b) == SymbolRole::WParam;
            if (wa != wb) return wa;
            if (wa) return a < b;
            return a > b;
        });
        for (SymbolId s : params) {
            for (const Rational& v : guess_values()) {
                if (!count_node()) return std::nullopt;
                SolveState next = state;
                if (!apply(next, s, ParamRat{v}, nullptr)) continue;
                if (auto result = dfs(next, entry_index)) return result;
                if (cap_hit_) return std::nullopt;
            }
        }
        note_failure("bounded value branching did not eliminate an odd coefficient");
        return std::nullopt;
    }

    bool count_node() {
        if (++nodes_ > opts_.branch_cap) {
            cap_hit_ = true;
            note_failure("branch limit exceeded");
            return false;
        }
        return true;
    }

    bool apply(SolveState& state, SymbolId sym, const ParamRat& value, const ParamPoly* side) {
        std::map<SymbolId, ParamRat> binding{{sym, value}};
        try {
            for (ParamRat& c : state.coeffs) c = c.substituted(binding);
            for (ParamRat& nv : state.nonvanishing) {
                nv = nv.substituted(binding);
                if (nv.is_zero()) return false;  // earlier division was by zero here
            }
        } catch (const std::domain_error&) {
            return false;
        }
        state.equalities.emplace_back(sym, value);
        state.solved.insert(sym);
        if (side) {
            ParamRat cond{*side};
            bool known = std::any_of(state.nonvanishing.begin(), state.nonvanishing.end(),
                                     [&](const ParamRat& e) { return e == cond; });
            if (!known) state.nonvanishing.push_back(std::move(cond));
        }
        return true;
    }

    std::optional<SolutionSet> finalize(const SolveState& state) {
        SolutionSet sol;
        sol.equalities = state.equalities;

        // Reduce every right-hand side to free parameters and plant constants.
        for (std::size_t pass = 0; pass <= sol.equalities.size(); ++pass) {
            bool pending = false;
            std::map<SymbolId, ParamRat> bindings;
            for (const auto& [s, v] : sol.equalities) bindings[s] = v;
            for (auto& [s, v] : sol.equalities) {
                auto own = bindings;
                own.erase(s);
                ParamRat reduced = v.substituted(own);
                if (!(reduced == v)) pending = true;
                v = reduced;
                for (SymbolId used : v.symbols())
                    if (state.solved.count(used)) pending = true;
            }
            if (!pending) break;
            if (pass == sol.equalities.size())
                throw InternalError("equality substitution did not reach a fixpoint");
        }

        for (std::size_t i = 0; i < cls_.entries.size(); ++i) {
            if (cls_.entries[i].odd) continue;
            const ParamRat& v = state.coeffs[i];
            if (v.is_zero()) continue;
            if (v.is_constant()) {
                if (v.constant_value() < 0) {
                    note_failure("an even coefficient is a negative constant");
                    return std::nullopt;
                }
                sol.inequalities.push_back({v, Constraint::Rel::Ge});
                continue;
            }
            sol.inequalities.push_back({v, Constraint::Rel::Ge});
        }
        for (const ParamRat& nv : state.nonvanishing) {
            if (nv.is_constant()) continue;  // nonzero by construction
            sol.inequalities.push_back({nv, Constraint::Rel::Ne});
        }

        for (SymbolId s : decision_)
            if (!state.solved.count(s)) sol.free_params.push_back(s);
        std::sort(sol.free_params.begin(), sol.free_params.end());

        bool plant_blocked = false;
        auto witness = find_witness(sol, plant_blocked);
        if (witness) {
            sol.witness = std::move(witness);
        } else if (!plant_blocked) {
            note_failure("no numeric witness satisfies the sign constraints");
            return std::nullopt;
        }
        return sol;
    }

    enum class CheckMode { Strict, Weak };

    static bool constraint_holds(const Constraint& c, const std::map<SymbolId, Rational>& values,
                                 CheckMode mode) {
        Rational v;
        try {
            v = c.expr.evaluate(values);
        } catch (const std::domain_error&) {
            return false;
        }
        switch (c.rel) {
            case Constraint::Rel::Ne: return v != 0;
            case Constraint::Rel::Gt: return v > 0;
            case Constraint::Rel::Ge: return mode == CheckMode::Strict ? v > 0 : v >= 0;
        }
        return false;
    }

    std::optional<std::map<SymbolId, Rational>> find_witness(const SolutionSet& sol,
                                                             bool& plant_blocked) {
        std::set<SymbolId> involved;
        for (const Constraint& c : sol.inequalities) c.expr.collect_symbols(involved);
        for (const auto& [s, v] : sol.equalities) v.collect_symbols(involved);
        std::set<SymbolId> frees(sol.free_params.begin(), sol.free_params.end());
        for (SymbolId s : involved) {
            if (!frees.count(s)) {
                plant_blocked = true;  // a plant constant must be bound by the caller
                return std::nullopt;
            }
        }

        std::vector<SymbolId> relevant;
        for (SymbolId s : sol.free_params)
            if (involved.count(s)) relevant.push_back(s);

        std::map<SymbolId, Rational> assignment;
        for (CheckMode mode : {CheckMode::Strict, CheckMode::Weak}) {
            assignment.clear();
            long budget = 20000;  // keeps the grid walk bounded for many parameters
            if (assign_from_grid(sol, relevant, 0, assignment, mode, budget))
                return complete_witness(sol, assignment);
        }

        std::mt19937 rng(opts_.seed);
        std::uniform_int_distribution<int> den_dist(1, 12);
        for (int attempt = 0; attempt < opts_.random_witness_attempts; ++attempt) {
            assignment.clear();
            for (SymbolId s : relevant) {
                int q = den_dist(rng);
                std::uniform_int_distribution<long> num_dist(-8L * q, 8L * q);
                assignment[s] = Rational(num_dist(rng), q);
                assignment[s].canonicalize();
            }
            bool ok = true;
            for (const Constraint& c : sol.inequalities)
                if (!constraint_holds(c, assignment, CheckMode::Weak)) {
                    ok = false;
                    break;
                }
            if (ok) return complete_witness(sol, assignment);
        }
        return std::nullopt;
    }

    bool assign_from_grid(const SolutionSet& sol, const std::vector<SymbolId>& relevant,
                          std::size_t index, std::map<SymbolId, Rational>& assignment,
                          CheckMode mode, long& budget) {
        if (index == relevant.size()) {
            for (const Constraint& c : sol.inequalities)
                if (!constraint_holds(c, assignment, mode)) return false;
            return true;
        }
        SymbolId s = relevant[index];
        for (const Rational& v : candidate_values(sol, s, assignment)) {
            if (--budget <= 0) return false;
            assignment[s] = v;
            bool feasible = true;
            for (const Constraint& c : sol.inequalities) {
                std::set<SymbolId> syms = c.expr.symbols();
                bool decided = std::all_of(syms.begin(), syms.end(), [&](SymbolId q) {
                    return assignment.count(q) > 0;
                });
                if (decided && !constraint_holds(c, assignment, mode)) {
                    feasible = false;
                    break;
                }
            }
            if (feasible && assign_from_grid(sol, relevant, index + 1, assignment, mode, budget))
                return true;
            assignment.erase(s);
        }
        return false;
    }

    // Grid values plus exact boundary-derived candidates for constraints that
    // are affine or quadratic in the one remaining parameter.
    std::vector<Rational> candidate_values(const SolutionSet& sol, SymbolId s,
                                           const std::map<SymbolId, Rational>& assignment) {
        std::vector<Rational> values = witness_grid();
        std::vector<Rational> derived;
        for (const Constraint& c : sol.inequalities) {
            std::set<SymbolId> syms = c.expr.symbols();
            if (!syms.count(s)) continue;
            bool others_assigned = std::all_of(syms.begin(), syms.end(), [&](SymbolId q) {
                return q == s || assignment.count(q) > 0;
            });
            if (!others_assigned) continue;
            std::map<SymbolId, ParamRat> partial;
            for (const auto& [q, v] : assignment) partial.emplace(q, ParamRat{v});
            ParamRat uni;
            try {
                uni = c.expr.substituted(partial);
            } catch (const std::domain_error&) {
                continue;
            }
            const ParamPoly& n = uni.num();
            int deg = n.degree_in(s);
            auto parts = n.coefficients_in(s);
            auto coeff = [&](int k) {
                auto it = parts.find(k);
                return it == parts.end() || !it->second.is_constant()
                           ? std::optional<Rational>{}
                           : std::optional<Rational>{it->second.constant_value()};
            };
            if (deg == 1) {
                auto a = coeff(1), b = coeff(0);
                if (a && *a != 0) {
                    Rational root = b ? -*b / *a : Rational(0);
                    derived.push_back(root);
                    derived.push_back(root + 1);
                    derived.push_back(root - 1);
                }
            } else if (deg == 2) {
                auto a = coeff(2), b = coeff(1);
                if (a && *a != 0) {
                    Rational vertex = b ? -*b / (2 * *a) : Rational(0);
                    derived.push_back(vertex);
                }
            }
        }
        std::sort(derived.begin(), derived.end());
        for (const Rational& v : derived)
            if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
        return values;
    }

    std::optional<std::map<SymbolId, Rational>> complete_witness(
        const SolutionSet& sol, std::map<SymbolId, Rational> assignment) {
        for (SymbolId s : sol.free_params)
            if (!assignment.count(s)) assignment[s] = Rational(0);
        try {
            for (auto it = sol.equalities.rbegin(); it != sol.equalities.rend(); ++it)
                assignment[it->first] = it->second.evaluate(assignment);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
        return assignment;
    }

    void note_failure(const std::string& reason) {
        if (failure_reason_.empty()) failure_reason_ = reason;
    }

    const ParityClassification& cls_;
    const std::set<SymbolId>& decision_;
    const SymbolTable& table_;
    const SolveOptions& opts_;
    std::size_t nodes_ = 0;
    bool cap_hit_ = false;
    std::string failure_reason_;
};

}  // namespace

std::optional<SolutionSet> solve(const FormalFactorization& f, const ParityClassification& cls,
                                 const std::set<SymbolId>& decision_params,
                                 const SymbolTable& table, const SolveOptions& options) {
    for (SymbolId w : f.params)
        if (!decision_params.count(w))
            throw std::invalid_argument("decision parameters must cover the minted parameters");
    for (SymbolId s : decision_params)
        if (!is_decision_role(table.role(s)))
            throw std::invalid_argument("only undetermined and feedback parameters can be solved");
    Searcher searcher(cls, decision_params, table, options);
    return searcher.run(nullptr);
}

namespace {
std::optional<SolutionSet> solve_with_reason(const ParityClassification& cls,
                                             const std::set<SymbolId>& decision,
                                             const SymbolTable& table, const SolveOptions& options,
                                             std::string* reason) {
    Searcher searcher(cls, decision, table, options);
    return searcher.run(reason);
}
}  // namespace

SumOfSquares extract_sos(const FormalFactorization& f, const SolutionSet& s) {
    SumOfSquares out;
    auto bindings = s.equality_bindings();
    for (const FactorTerm& t : f.factors) {
        ParamRat c = t.coefficient.substituted(bindings);
        if (c.is_zero()) continue;
        if (t.any_odd_exponent())
            throw std::logic_error("solution set does not eliminate an odd-exponent term");
        SosTerm term;
        term.coefficient = c;
        if (!t.exponents.empty() && t.exponents[0] > 0)
            term.components.push_back({Polynomial::variable(1), t.exponents[0]});
        for (const LinearForm& form : t.forms) {
            int j = t.exponents[static_cast<std::size_t>(form.sigma - 1)];
            term.components.push_back({form.to_polynomial(bindings), j});
        }
        out.terms.push_back(std::move(term));
    }
    Polynomial rem = f.remainder.substituted_params(bindings);
    std::vector<std::pair<int, ParamRat>> rem_terms;
    for (const auto& [m, c] : rem.terms()) rem_terms.emplace_back(m.exponent_of(1), c);
    std::sort(rem_terms.begin(), rem_terms.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [power, c] : rem_terms) {
        if (power % 2 != 0)
            throw std::logic_error("solution set does not eliminate an odd-exponent term");
        SosTerm term;
        term.coefficient = c;
        if (power > 0) term.components.push_back({Polynomial::variable(1), power});
        out.terms.push_back(std::move(term));
    }
    return out;
}

namespace {

// Sufficient full-rank test: terms that are a positive weight times a single
// even power of one linear form vanish exactly on that form's kernel; if
// those forms span all states the certificate is strictly positive definite.
bool compute_strict(const Certificate& cert, const SymbolTable& table) {
    if (!cert.solution.witness) return false;
    const auto& witness = *cert.solution.witness;
    int n = table.n_states();
    std::vector<std::vector<Rational>> rows;
    for (const SosTerm& t : cert.sos.terms) {
        if (t.components.size() != 1) continue;
        const Polynomial& form = t.components[0].form;
        if (form.degree() != 1) continue;
        Rational weight;
        try {
            weight = t.coefficient.evaluate(witness);
        } catch (const std::domain_error&) {
            continue;
        }
        if (weight <= 0) continue;
        std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
        bool usable = true;
        for (const auto& [m, c] : form.terms()) {
            if (m.is_constant()) {
                usable = false;  // affine, not linear
                break;
            }
            int pos = m.top_position();
            Rational value;
            try {
                value = c.evaluate(witness);
            } catch (const std::domain_error&) {
                usable = false;
                break;
            }
            if (pos >= 1 && pos <= n) row[static_cast<std::size_t>(pos - 1)] = value;
        }
        if (usable) rows.push_back(std::move(row));
    }
    // Rank by Gaussian elimination over the rationals.
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        const auto& prow = rows[static_cast<std::size_t>(rank)];
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            auto& row = rows[static_cast<std::size_t>(r)];
            if (row[static_cast<std::size_t>(col)] == 0) continue;
            Rational factor = row[static_cast<std::size_t>(col)] /
                              prow[static_cast<std::size_t>(col)];
            for (int c2 = 0; c2 < n; ++c2)
                row[static_cast<std::size_t>(c2)] -= factor * prow[static_cast<std::size_t>(c2)];
        }
        ++rank;
    }
    return rank == n;
}

}  // namespace

PosOutcome pos_check(const Polynomial& p, SymbolTable& table,
                     const std::set<SymbolId>& extra_decision_params,
                     const SolveOptions& options) {
    PosOutcome out;
    FormalFactorization f = formal_lf(p, table);
    ParityClassification cls = classify(f);
    std::set<SymbolId> decision = extra_decision_params;
    for (SymbolId w : f.params) decision.insert(w);

    std::string reason;
    auto sol = solve_with_reason(cls, decision, table, options, &reason);
    if (!sol) {
        out.reason = reason.empty() ? "no certificate found" : reason;
        return out;
    }
    Certificate cert;
    cert.factorization = std::move(f);
    cert.solution = std::move(*sol);
    cert.sos = extract_sos(cert.factorization, cert.solution);
    cert.strict_definite = compute_strict(cert, table);
    out.certificate = std::move(cert);
    return out;
}

WitnessReport verify_witness(const Polynomial& p, const Certificate& cert,
                             const SymbolTable& table, int samples, unsigned seed) {
    if (!cert.solution.witness)
        throw std::invalid_argument("certificate carries no numeric witness");
    WitnessReport report;

    std::map<SymbolId, ParamRat> bindings;
    for (const auto& [s, v] : *cert.solution.witness) bindings.emplace(s, ParamRat{v});

    Polynomial p_num = p.substituted_params(bindings);
    // Rebuild the square terms directly from the factorization at the witness
    // values: only all-even-exponent terms count, so a witness that fails to
    // kill an odd term (or to honor an equality) shows up as a residual.
    Polynomial sos_num;
    EvaluatedFactorization ev = evaluate_with(cert.factorization, bindings);
    for (const EvaluatedTerm& t : ev.terms) {
        bool all_even = true;
        for (int j : t.exponents)
            if (j % 2 != 0) all_even = false;
        if (!all_even) continue;
        Polynomial prod = Polynomial::constant(t.coefficient);
        if (!t.exponents.empty() && t.exponents[0] > 0)
            prod = prod * Polynomial::variable(1, t.exponents[0]);
        for (std::size_t i = 0; i < t.forms.size(); ++i)
            prod = prod *
                   t.forms[i].pow(t.exponents[static_cast<std::size_t>(t.form_positions[i] - 1)]);
        sos_num = sos_num + prod;
    }
    for (const auto& [m, c] : ev.remainder.terms())
        if (m.exponent_of(1) % 2 == 0) sos_num = sos_num + Polynomial::term(m, c);
    report.expansion_matches = p_num == sos_num;

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    int n = table.n_states();
    report.samples_nonnegative = true;
    report.min_sample_value = 0.0;
    std::map<SymbolId, double> no_params;
    for (int i = 0; i < samples; ++i) {
        std::map<int, double> point;
        std::vector<double> coords;
        for (int pos = 1; pos <= n; ++pos) {
            double v = coord(rng);
            point[pos] = v;
            coords.push_back(v);
        }
        double value = p_num.evaluate_double(point, no_params);
        report.min_sample_value = std::min(report.min_sample_value, value);
        if (value < -1e-9) {
            report.samples_nonnegative = false;
            if (!report.counterexample) report.counterexample = coords;
        }
    }
    return report;
}

}  // namespace polycert
