#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "polycert/formal_factor.hpp"

using namespace polycert;
using testutil::mono;
using testutil::q;

namespace {

ParamRat sym(const SymbolTable& table, const std::string& name) {
    return ParamRat::symbol(table.require(name));
}

}  // namespace

TEST_CASE("factorization of 5*x1 - 7*x1*x2 + 11*x1*x3") {
    SymbolTable table = testutil::states(3);
    Polynomial p = parse_poly("5*x1 - 7*x1*x2 + 11*x1*x3", table);
    FormalFactorization f = formal_lf(p, table);

    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].coefficient == ParamRat{q(11)});
    CHECK(f.factors[0].exponents == std::vector<int>{1, 0, 1});
    REQUIRE(f.factors[0].forms.size() == 1);
    CHECK(f.factors[0].forms[0].sigma == 3);
    CHECK(f.factors[0].forms[0].to_polynomial() ==
          parse_poly("W_3_1_1*x1 + W_3_2_1*x2 + x3", table));

    CHECK(f.factors[1].coefficient == ParamRat{q(-7)} - ParamRat{q(11)} * sym(table, "W_3_2_1"));
    CHECK(f.factors[1].exponents == std::vector<int>{1, 1, 0});
    REQUIRE(f.factors[1].forms.size() == 1);
    CHECK(f.factors[1].forms[0].to_polynomial() == parse_poly("W_2_1_2*x1 + x2", table));

    CHECK(f.remainder ==
          parse_poly("5*x1 + (7*W_2_1_2 - 11*W_3_1_1 + 11*W_2_1_2*W_3_2_1)*x1^2", table));

    // Minting order drives the parameter vector.
    std::vector<std::string> names;
    for (SymbolId s : f.params) names.push_back(table.name(s));
    CHECK(names == std::vector<std::string>{"W_3_1_1", "W_3_2_1", "W_2_1_2"});
}

TEST_CASE("pure x1 input goes entirely to the remainder") {
    SymbolTable table = testutil::states(3);
    Polynomial p = parse_poly("3*x1^4", table);
    FormalFactorization f = formal_lf(p, table);
    CHECK(f.factors.empty());
    CHECK(f.remainder == p);
    CHECK(f.params.empty());

    FormalFactorization zero = formal_lf(Polynomial{}, table);
    CHECK(zero.factors.empty());
    CHECK(zero.remainder.is_zero());

    // Constants ride in the remainder as the x1^0 coefficient.
    FormalFactorization c = formal_lf(parse_poly("7 + 2*x1", table), table);
    CHECK(c.factors.empty());
    CHECK(c.remainder == parse_poly("7 + 2*x1", table));
    CHECK(expand(c) == parse_poly("7 + 2*x1", table));
}

TEST_CASE("factorization of x1^2 + 2*x1*x2 + x2^2, worked by hand") {
    SymbolTable table = testutil::states(2);
    Polynomial p = parse_poly("x1^2 + 2*x1*x2 + x2^2", table);
    FormalFactorization f = formal_lf(p, table);

    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].coefficient == ParamRat{q(1)});
    CHECK(f.factors[0].exponents == std::vector<int>{0, 2});
    CHECK(f.factors[1].coefficient == ParamRat{q(2)} - ParamRat{q(2)} * sym(table, "W_2_1_1"));
    CHECK(f.factors[1].exponents == std::vector<int>{1, 1});
    ParamRat w1 = sym(table, "W_2_1_1"), w2 = sym(table, "W_2_1_2");
    ParamRat expected_rem =
        ParamRat{q(1)} - w1 * w1 - (ParamRat{q(2)} - ParamRat{q(2)} * w1) * w2;
    CHECK(f.remainder == Polynomial::term(mono({{1, 2}}), expected_rem));

    // Cross-checked by expansion.
    CHECK(expand(f) == p);
}

TEST_CASE("inputs are rejected, parameters in coefficients are fine") {
    SymbolTable table = testutil::states(2);
    table.add_input("u1");
    CHECK_THROWS(formal_lf(parse_poly("x1*u1", table), table));

    SymbolId a = table.add_feedback_param("A1", 1, 1);
    Polynomial p = Polynomial::term(mono({{2, 2}}), ParamRat::symbol(a)) +
                   parse_poly("x1*x2", table);
    FormalFactorization f = formal_lf(p, table);
    CHECK(expand(f) == p);
    CHECK(f.factors[0].coefficient == ParamRat::symbol(a));
}

TEST_CASE("expand(formal_lf(p)) == p on 200 random polynomials, descent is strict") {
    std::mt19937 rng(42);
    for (int k = 0; k < 200; ++k) {
        int n = 1 + k % 4;
        int degree = 1 + (k / 4) % 4;
        SymbolTable table = testutil::states(n);
        Polynomial p = testutil::random_poly(rng, n, degree, 8);
        FormalFactorization f = formal_lf(p, table);
        CHECK((expand(f) - p).is_zero());
        (void)degree;
        // Extraction monomials strictly decrease.
        auto extraction_monomial = [](const FactorTerm& t) {
            std::vector<std::pair<int, int>> entries;
            for (std::size_t v = 0; v < t.exponents.size(); ++v)
                if (t.exponents[v] > 0) entries.emplace_back(static_cast<int>(v) + 1, t.exponents[v]);
            return Monomial(std::move(entries));
        };
        for (std::size_t i = 0; i + 1 < f.factors.size(); ++i)
            CHECK(Monomial::compare(extraction_monomial(f.factors[i + 1]),
                                    extraction_monomial(f.factors[i])) == Ordering::Less);
        // Remainder involves no variable above x1.
        CHECK(f.remainder.depends_only_on(1));
    }
}

TEST_CASE("round trip on the quadratic-form example") {
    SymbolTable table = testutil::states(3);
    Polynomial p = parse_poly("x1^2 - 2*x1*x2 + 6*x2^2 - 4*x2*x3 + 3*x3^2", table);
    FormalFactorization f = formal_lf(p, table);
    CHECK((expand(f) - p).is_zero());
    CHECK(f.factors.size() == 5);  // five mixed terms before the remainder
    CHECK(f.factors[0].coefficient == ParamRat{q(3)});
    CHECK(f.factors[1].coefficient ==
          ParamRat{q(-4)} - ParamRat{q(6)} * sym(table, "W_3_2_1"));
    // Third and fourth coefficients of the reference factorization.
    ParamRat w321 = sym(table, "W_3_2_1"), w311 = sym(table, "W_3_1_1");
    ParamRat w212 = sym(table, "W_2_1_2"), w322 = sym(table, "W_3_2_2");
    CHECK(f.factors[2].coefficient ==
          ParamRat{q(6)} * w321 * w212 + ParamRat{q(4)} * w212 - ParamRat{q(6)} * w311);
    CHECK(f.factors[3].coefficient ==
          ParamRat{q(-3)} * w321 * w321 + ParamRat{q(6)} * w322 * w321 +
              ParamRat{q(4)} * w322 + ParamRat{q(6)});
    CHECK(f.factors[3].exponents == std::vector<int>{0, 2, 0});
    CHECK(f.factors[4].exponents == std::vector<int>{1, 1, 0});
}

TEST_CASE("same input twice gives structurally identical output") {
    SymbolTable t1 = testutil::states(3);
    SymbolTable t2 = testutil::states(3);
    Polynomial p1 = parse_poly("5*x1 - 7*x1*x2 + 11*x1*x3 + x2^2", t1);
    Polynomial p2 = parse_poly("5*x1 - 7*x1*x2 + 11*x1*x3 + x2^2", t2);
    FormalFactorization f1 = formal_lf(p1, t1);
    FormalFactorization f2 = formal_lf(p2, t2);
    CHECK(f1 == f2);
    // The first coefficient is always the input's maximum-term coefficient.
    CHECK(f1.factors[0].coefficient == p1.maxterm().first);
}

TEST_CASE("evaluation by rule vectors") {
    SymbolTable table = testutil::states(3);
    Polynomial p = parse_poly("5*x1 - 7*x1*x2 + 11*x1*x3", table);
    FormalFactorization f = formal_lf(p, table);

    SUBCASE("numeric rules reproduce the worked evaluation") {
        RuleSet rules;
        rules.rules.push_back({ParamRat{q(-2)}, ParamRat{q(1)}, ParamRat{q(-1)}});
        auto evaluated = evaluate(f, rules);
        REQUIRE(evaluated.size() == 1);
        const EvaluatedFactorization& ev = evaluated[0];
        REQUIRE(ev.terms.size() == 2);
        CHECK(ev.terms[0].coefficient == ParamRat{q(11)});
        CHECK(ev.terms[0].forms[0] == parse_poly("-2*x1 + x2 + x3", table));
        CHECK(ev.terms[1].coefficient == ParamRat{q(-18)});
        CHECK(ev.terms[1].forms[0] == parse_poly("-x1 + x2", table));
        CHECK(ev.remainder == parse_poly("5*x1 + 4*x1^2", table));
        // Evaluation commutes with expansion.
        CHECK(ev.expand() == p);
    }

    SUBCASE("fresh symbols re-parameterize") {
        SymbolId phi = table.add_free_symbol("phi");
        SymbolId theta = table.add_free_symbol("theta");
        RuleSet rules;
        rules.rules.push_back(
            {ParamRat::symbol(phi), ParamRat::symbol(phi), ParamRat::symbol(theta)});
        auto evaluated = evaluate(f, rules);
        ParamRat pr = ParamRat::symbol(phi), th = ParamRat::symbol(theta);
        ParamRat expected = ParamRat{q(7)} * th - ParamRat{q(11)} * pr +
                            ParamRat{q(11)} * th * pr;
        CHECK(evaluated[0].remainder ==
              Polynomial::term(mono({{1, 2}}), expected) + parse_poly("5*x1", table));
        CHECK(evaluated[0].expand() == p);
    }

    SUBCASE("all-zero rules collapse forms to bare leading variables") {
        RuleSet rules;
        rules.rules.push_back({ParamRat{q(0)}, ParamRat{q(0)}, ParamRat{q(0)}});
        auto evaluated = evaluate(f, rules);
        CHECK(evaluated[0].terms[0].forms[0] == Polynomial::variable(3));
        CHECK(evaluated[0].terms[1].coefficient == ParamRat{q(-7)});
        CHECK(evaluated[0].expand() == p);
    }

    SUBCASE("length mismatch is rejected") {
        RuleSet bad;
        bad.rules.push_back({ParamRat{q(1)}});
        CHECK_THROWS(evaluate(f, bad));
    }
}

TEST_CASE("evaluate commutes with expand on random inputs") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> num(-5, 5);
    for (int k = 0; k < 30; ++k) {
        SymbolTable table = testutil::states(3);
        Polynomial p = testutil::random_poly(rng, 3, 3, 6);
        FormalFactorization f = formal_lf(p, table);
        std::map<SymbolId, ParamRat> bindings;
        RuleSet rules;
        rules.rules.emplace_back();
        for (SymbolId s : f.params) {
            Rational v = q(num(rng), 2);
            bindings.emplace(s, ParamRat{v});
            rules.rules.back().push_back(ParamRat{v});
        }
        Polynomial expand_then_subst = expand(f).substituted_params(bindings);
        Polynomial subst_then_expand = evaluate(f, rules)[0].expand();
        CHECK(expand_then_subst == subst_then_expand);
    }
}
