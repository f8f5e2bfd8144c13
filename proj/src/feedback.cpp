#include "polycert/feedback.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace polycert {

void PolySystem::validate() const {
    if (static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("right-hand side count does not match the state dimension");
    for (int i = 0; i < n; ++i) {
        const Polynomial& phi = rhs[static_cast<std::size_t>(i)];
        if (!phi.coefficient_of(Monomial{}).is_zero())
            throw std::invalid_argument("equation " + std::to_string(i + 1) +
                                        " has a free term; the origin must be an equilibrium");
        for (int pos : phi.variable_positions())
            if (pos > n + m)
                throw std::invalid_argument("equation " + std::to_string(i + 1) +
                                            " uses an undeclared variable");
    }
}

FeedbackTemplate full_template(const SymbolTable& table, int degree) {
    if (degree < 1) throw std::invalid_argument("feedback degree must be at least 1");
    int n = table.n_states();
    int m = table.n_inputs();
    std::vector<Monomial> monomials;
    for (int d = 1; d <= degree; ++d) {
        std::vector<Monomial> of_degree;
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        // Enumerate exponent vectors of total degree d.
        std::function<void(int, int)> rec = [&](int pos, int remaining) {
            if (pos == n) {
                if (remaining == 0) {
                    std::vector<std::pair<int, int>> entries;
                    for (int i = 0; i < n; ++i)
                        if (exps[static_cast<std::size_t>(i)] > 0)
                            entries.emplace_back(i + 1, exps[static_cast<std::size_t>(i)]);
                    of_degree.push_back(Monomial(std::move(entries)));
                }
                return;
            }
            for (int e = 0; e <= remaining; ++e) {
                exps[static_cast<std::size_t>(pos)] = e;
                rec(pos + 1, remaining - e);
            }
            exps[static_cast<std::size_t>(pos)] = 0;
        };
        rec(0, d);
        std::sort(of_degree.begin(), of_degree.end(), MonomialLess{});
        monomials.insert(monomials.end(), of_degree.begin(), of_degree.end());
    }
    return FeedbackTemplate(static_cast<std::size_t>(m), monomials);
}

namespace {

std::string slot_name(int input, int slot) {
    static const char* letters[] = {"A", "B", "G", "D", "E", "F", "H", "K", "M", "N"};
    if (slot <= 10) return std::string(letters[slot - 1]) + std::to_string(input);
    return "P" + std::to_string(slot) + "_" + std::to_string(input);
}

}  // namespace

FeedbackFamily build_parametric_feedback(SymbolTable& table, const FeedbackTemplate& tmpl) {
    int n = table.n_states();
    int m = table.n_inputs();
    if (static_cast<int>(tmpl.size()) != m)
        throw std::invalid_argument("template must list monomials for every input");
    FeedbackFamily family;
    family.used_template = tmpl;
    for (int j = 1; j <= m; ++j) {
        const auto& monomials = tmpl[static_cast<std::size_t>(j - 1)];
        Polynomial law;
        int slot = 0;
        for (const Monomial& mono : monomials) {
            if (mono.is_constant())
                throw std::invalid_argument("feedback templates must not contain constant terms");
            if (!mono.within_positions(n))
                throw std::invalid_argument("feedback templates may use state variables only");
            ++slot;
            SymbolId sym;
            std::string name = slot_name(j, slot);
            auto existing = table.lookup(name);
            if (!existing) {
                sym = table.add_feedback_param(name, j, slot);
            } else if (table.role(*existing) == SymbolRole::FeedbackParam &&
                       table.info(*existing).fb_input == j &&
                       table.info(*existing).fb_slot == slot) {
                sym = *existing;  // same slot re-requested by a later template
            } else {
                std::string fallback = "FB" + std::to_string(j) + "_" + std::to_string(slot);
                auto prior = table.lookup(fallback);
                sym = prior ? *prior : table.add_feedback_param(fallback, j, slot);
            }
            family.params.push_back(sym);
            law = law + Polynomial::term(mono, ParamRat::symbol(sym));
        }
        family.laws.push_back(std::move(law));
    }
    return family;
}

FeedbackFamily build_parametric_feedback(SymbolTable& table, int degree) {
    return build_parametric_feedback(table, full_template(table, degree));
}

Polynomial lyapunov_derivative(const PolySystem& sys, const LyapunovSpec& lyap,
                               const std::vector<Polynomial>& laws, const SymbolTable& table) {
    if (static_cast<int>(laws.size()) != sys.m)
        throw std::invalid_argument("feedback law count does not match the input dimension");
    if (lyap.L.has_variables_above(sys.n))
        throw std::invalid_argument("the Lyapunov function must depend on states only");
    std::map<int, Polynomial> closing;
    for (int j = 1; j <= sys.m; ++j) {
        const Polynomial& law = laws[static_cast<std::size_t>(j - 1)];
        if (law.has_variables_above(sys.n))
            throw std::invalid_argument("feedback laws must depend on states only");
        closing[sys.n + j] = law;
    }
    Polynomial v;
    for (int i = 1; i <= sys.n; ++i) {
        Polynomial closed = sys.rhs[static_cast<std::size_t>(i - 1)].substituted_vars(closing);
        v = v - lyap.L.partial_derivative(i) * closed;
    }
    (void)table;
    return v;
}

JacobianPair linearize(const PolySystem& sys, const SymbolTable& table) {
    (void)table;
    JacobianPair jac;
    jac.a.assign(static_cast<std::size_t>(sys.n),
                 std::vector<ParamRat>(static_cast<std::size_t>(sys.n), ParamRat{}));
    jac.b.assign(static_cast<std::size_t>(sys.n),
                 std::vector<ParamRat>(static_cast<std::size_t>(sys.m), ParamRat{}));
    for (int i = 1; i <= sys.n; ++i) {
        const Polynomial& phi = sys.rhs[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= sys.n; ++j)
            jac.a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                phi.coefficient_of(Monomial::variable(j));
        for (int j = 1; j <= sys.m; ++j)
            jac.b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                phi.coefficient_of(Monomial::variable(sys.n + j));
    }
    return jac;
}

std::vector<FeedbackTemplate> suggest_templates(const PolySystem& sys, const SymbolTable& table,
                                                int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("max feedback degree must be at least 1");
    int n = sys.n, m = sys.m;
    std::vector<Monomial> linear;
    for (int i = 1; i <= n; ++i) linear.push_back(Monomial::variable(i));

    std::vector<FeedbackTemplate> sequence;
    auto push_unique = [&](FeedbackTemplate t) {
        for (auto& list : t) std::sort(list.begin(), list.end(), MonomialLess{});
        if (std::find(sequence.begin(), sequence.end(), t) == sequence.end())
            sequence.push_back(std::move(t));
    };

    push_unique(FeedbackTemplate(static_cast<std::size_t>(m), linear));

    if (max_degree >= 2) {
        // Mirror the nonlinear state monomials of the equations each input drives.
        FeedbackTemplate mirrored(static_cast<std::size_t>(m), linear);
        bool added = false;
        for (int j = 1; j <= m; ++j) {
            for (int i = 1; i <= n; ++i) {
                const Polynomial& phi = sys.rhs[static_cast<std::size_t>(i - 1)];
                if (!phi.variable_positions().count(n + j)) continue;
                for (const auto& [mono, c] : phi.terms()) {
                    if (!mono.within_positions(n)) continue;
                    if (mono.degree() < 2 || mono.degree() > max_degree) continue;
                    auto& list = mirrored[static_cast<std::size_t>(j - 1)];
                    if (std::find(list.begin(), list.end(), mono) == list.end()) {
                        list.push_back(mono);
                        added = true;
                    }
                }
            }
        }
        if (added) push_unique(std::move(mirrored));

        FeedbackTemplate crosses(static_cast<std::size_t>(m), linear);
        for (int i = 1; i <= n; ++i)
            for (int j2 = i + 1; j2 <= n; ++j2)
                for (auto& list : crosses)
                    list.push_back(Monomial({{i, 1}, {j2, 1}}));
        push_unique(std::move(crosses));
    }
    for (int d = 2; d <= max_degree; ++d) push_unique(full_template(table, d));
    return sequence;
}

LyapunovSpec default_lyapunov(const SymbolTable& table) {
    Polynomial L;
    for (int i = 1; i <= table.n_states(); ++i) L = L + Polynomial::variable(i, 2);
    return {L};
}

namespace {

void validate_lyapunov(const LyapunovSpec& lyap, const PolySystem& sys, unsigned seed) {
    if (lyap.L.is_zero()) throw std::invalid_argument("the Lyapunov function must be nonzero");
    if (!lyap.L.coefficient_of(Monomial{}).is_zero())
        throw std::invalid_argument("the Lyapunov function must vanish at the origin");
    if (lyap.L.has_variables_above(sys.n))
        throw std::invalid_argument("the Lyapunov function must depend on states only");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-40, 40);
    std::map<SymbolId, Rational> no_params;
    for (int k = 0; k < 1000; ++k) {
        std::map<int, Rational> point;
        bool all_zero = true;
        for (int i = 1; i <= sys.n; ++i) {
            Rational v(num(rng), 8);
            v.canonicalize();
            point[i] = v;
            if (v != 0) all_zero = false;
        }
        if (all_zero) continue;
        if (lyap.L.evaluate(point, no_params) <= 0)
            throw std::invalid_argument("the supplied Lyapunov candidate is not positive on a sample point");
    }
}

}  // namespace

SynthesisOutcome synthesize(const PolySystem& sys, const LyapunovSpec& lyap,
                            const FeedbackTemplate& tmpl, SymbolTable& table,
                            const SolveOptions& options) {
    sys.validate();
    validate_lyapunov(lyap, sys, options.seed);

    SynthesisOutcome outcome;
    FeedbackFamily family = build_parametric_feedback(table, tmpl);
    Polynomial v = lyapunov_derivative(sys, lyap, family.laws, table);

    std::set<SymbolId> decision(family.params.begin(), family.params.end());
    PosOutcome pos = pos_check(v, table, decision, options);
    if (!pos.ok()) {
        outcome.reason = "no stabilizer found at this template: " + pos.reason;
        return outcome;
    }

    family.lyapunov_derivative = std::move(v);
    family.constraints = std::move(pos.certificate->solution);
    family.sos = std::move(pos.certificate->sos);
    family.strict_definite = pos.certificate->strict_definite;

    auto bindings = family.constraints.equality_bindings();
    for (const Polynomial& law : family.laws)
        family.constrained_laws.push_back(law.substituted_params(bindings));

    if (family.constraints.witness) {
        std::map<SymbolId, ParamRat> numeric;
        for (const auto& [s, value] : *family.constraints.witness)
            numeric.emplace(s, ParamRat{value});
        std::vector<Polynomial> witness_laws;
        for (const Polynomial& law : family.laws)
            witness_laws.push_back(law.substituted_params(numeric));
        family.witness_laws = std::move(witness_laws);
    }

    outcome.family = std::move(family);
    return outcome;
}

SynthesisOutcome synthesize_auto(const PolySystem& sys, const LyapunovSpec& lyap,
                                 SymbolTable& table, int max_degree,
                                 const SolveOptions& options) {
    SynthesisOutcome last;
    for (const FeedbackTemplate& tmpl : suggest_templates(sys, table, max_degree)) {
        last = synthesize(sys, lyap, tmpl, table, options);
        if (last.ok()) return last;
    }
    if (last.reason.empty()) last.reason = "no stabilizer found up to the degree cap";
    return last;
}

}  // namespace polycert
