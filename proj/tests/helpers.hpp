#pragma once

#include <random>
#include <string>
#include <vector>

#include "polycert/parse.hpp"
#include "polycert/polynomial.hpp"
#include "polycert/print.hpp"

namespace testutil {

using namespace polycert;

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline SymbolTable states(int n) {
    SymbolTable table;
    for (int i = 1; i <= n; ++i) table.add_state("x" + std::to_string(i));
    return table;
}

// Random sparse polynomial with rational coefficients and optional parameter
// symbols mixed into the coefficients.
inline Polynomial random_poly(std::mt19937& rng, int n_vars, int max_degree, int max_terms,
                              const std::vector<SymbolId>& params = {}) {
    std::uniform_int_distribution<int> n_terms(1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff_num(-9, 9);
    std::uniform_int_distribution<int> coeff_den(1, 4);
    std::uniform_int_distribution<int> use_param(0, 3);
    std::uniform_int_distribution<std::size_t> pick_param(0, params.empty() ? 0 : params.size() - 1);

    Polynomial p;
    int terms = n_terms(rng);
    for (int t = 0; t < terms; ++t) {
        int total = deg(rng);
        std::vector<std::pair<int, int>> entries;
        for (int rest = total; rest > 0;) {
            std::uniform_int_distribution<int> var(1, n_vars);
            std::uniform_int_distribution<int> exp(1, rest);
            int e = exp(rng);
            entries.emplace_back(var(rng), e);
            rest -= e;
        }
        Rational c(coeff_num(rng), coeff_den(rng));
        c.canonicalize();
        if (c == 0) c = 1;
        ParamRat coeff{c};
        if (!params.empty() && use_param(rng) == 0)
            coeff = coeff * ParamRat::symbol(params[pick_param(rng)]);
        p = p + Polynomial::term(Monomial(std::move(entries)), coeff);
    }
    return p;
}

inline Monomial mono(std::vector<std::pair<int, int>> entries) { return Monomial(std::move(entries)); }

}  // namespace testutil
