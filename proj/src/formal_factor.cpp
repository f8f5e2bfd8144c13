#include "polycert/formal_factor.hpp"

#include <algorithm>
#include <cmath>

namespace polycert {

Polynomial LinearForm::to_polynomial() const {
    Polynomial p = Polynomial::variable(sigma);
    for (std::size_t i = 0; i < coeff_params.size(); ++i) {
        Polynomial part = Polynomial::term(Monomial::variable(static_cast<int>(i + 1)),
                                           ParamRat::symbol(coeff_params[i]));
        p = p + part;
    }
    return p;
}

Polynomial LinearForm::to_polynomial(const std::map<SymbolId, ParamRat>& bindings) const {
    return to_polynomial().substituted_params(bindings);
}

bool FactorTerm::any_odd_exponent() const {
    return std::any_of(exponents.begin(), exponents.end(), [](int j) { return j % 2 != 0; });
}

Polynomial FactorTerm::product_polynomial() const {
    Polynomial prod = Polynomial::constant(ParamRat{Rational(1)});
    if (!exponents.empty() && exponents[0] > 0)
        prod = prod * Polynomial::variable(1, exponents[0]);
    for (const LinearForm& form : forms) {
        int j = exponents[static_cast<std::size_t>(form.sigma - 1)];
        prod = prod * form.to_polynomial().pow(j);
    }
    return prod;
}

bool FormalFactorization::operator==(const FormalFactorization& other) const {
    if (factors.size() != other.factors.size()) return false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const FactorTerm& a = factors[i];
        const FactorTerm& b = other.factors[i];
        if (a.coefficient != b.coefficient || a.exponents != b.exponents) return false;
        if (a.forms.size() != b.forms.size()) return false;
        for (std::size_t k = 0; k < a.forms.size(); ++k) {
            if (a.forms[k].sigma != b.forms[k].sigma ||
                a.forms[k].coeff_params != b.forms[k].coeff_params)
                return false;
        }
    }
    return remainder == other.remainder && params == other.params;
}

FormalFactorization formal_lf(const Polynomial& p, SymbolTable& table,
                              const FactorOptions& options) {
    const int n = table.n_states();
    for (int pos : p.variable_positions())
        if (pos > n)
            throw std::invalid_argument(
                "factorization input must be a polynomial in the state variables only");

    FormalFactorization out;
    out.n_variables = n;

    std::size_t cap = options.iteration_cap_scale * std::max<std::size_t>(1, p.term_count()) *
                      static_cast<std::size_t>(
                          std::pow(static_cast<double>(p.degree() + 1), static_cast<double>(n)));

    Polynomial rest = p;
    Monomial previous_max;
    bool have_previous = false;
    int iteration = 0;

    while (!rest.is_zero() && !rest.depends_only_on(1)) {
        if (static_cast<std::size_t>(iteration) >= cap)
            throw InternalError("factorization exceeded its iteration cap");
        ++iteration;

        auto [coeff, mono] = rest.maxterm();
        if (have_previous && !(mono < previous_max))
            throw InternalError("leading monomial failed to decrease");
        previous_max = mono;
        have_previous = true;

        FactorTerm term;
        term.coefficient = coeff;
        term.exponents = mono.exponent_vector(n);
        for (int sigma = 2; sigma <= n; ++sigma) {
            if (term.exponents[static_cast<std::size_t>(sigma - 1)] == 0) continue;
            LinearForm form;
            form.sigma = sigma;
            form.iteration = iteration;
            for (int rho = 1; rho < sigma; ++rho) {
                SymbolId w = table.add_w_param(sigma, rho, iteration);
                form.coeff_params.push_back(w);
                out.params.push_back(w);
            }
            term.forms.push_back(std::move(form));
        }

        rest.sub_in_place(term.product_polynomial().scaled(term.coefficient));
        out.factors.push_back(std::move(term));
    }

    out.remainder = rest;
    return out;
}

Polynomial expand(const FormalFactorization& f) {
    Polynomial acc = f.remainder;
    for (const FactorTerm& t : f.factors)
        acc = acc + t.product_polynomial().scaled(t.coefficient);
    return acc;
}

EvaluatedFactorization evaluate_with(const FormalFactorization& f,
                                     const std::map<SymbolId, ParamRat>& bindings) {
    EvaluatedFactorization out;
    for (const FactorTerm& t : f.factors) {
        ParamRat c = t.coefficient.substituted(bindings);
        if (c.is_zero()) continue;
        EvaluatedTerm et;
        et.coefficient = c;
        et.exponents = t.exponents;
        for (const LinearForm& form : t.forms) {
            et.forms.push_back(form.to_polynomial(bindings));
            et.form_positions.push_back(form.sigma);
        }
        out.terms.push_back(std::move(et));
    }
    out.remainder = f.remainder.substituted_params(bindings);
    return out;
}

std::vector<EvaluatedFactorization> evaluate(const FormalFactorization& f, const RuleSet& rules) {
    std::vector<EvaluatedFactorization> out;
    for (const auto& rule : rules.rules) {
        if (rule.size() != f.params.size())
            throw std::invalid_argument("rule vector length does not match the parameter count");
        std::map<SymbolId, ParamRat> bindings;
        for (std::size_t i = 0; i < rule.size(); ++i) bindings[f.params[i]] = rule[i];
        out.push_back(evaluate_with(f, bindings));
    }
    return out;
}

Polynomial EvaluatedFactorization::expand() const {
    Polynomial acc = remainder;
    for (const EvaluatedTerm& t : terms) {
        Polynomial prod = Polynomial::constant(t.coefficient);
        if (!t.exponents.empty() && t.exponents[0] > 0)
            prod = prod * Polynomial::variable(1, t.exponents[0]);
        for (std::size_t i = 0; i < t.forms.size(); ++i) {
            int j = t.exponents[static_cast<std::size_t>(t.form_positions[i] - 1)];
            prod = prod * t.forms[i].pow(j);
        }
        acc = acc + prod;
    }
    return acc;
}

}  // namespace polycert
