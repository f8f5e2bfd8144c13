#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "polycert/feedback.hpp"
#include "polycert/json_io.hpp"

using namespace polycert;
using testutil::mono;
using testutil::q;

namespace {

SystemDocument load_system(const std::string& name) {
    std::ifstream in(std::string(POLYCERT_DATA_DIR) + "/" + name);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_system(buffer.str());
}

// Substitutes a full numeric assignment into a solution set and checks it.
bool family_contains(const SolutionSet& sol, const SymbolTable& table,
                     const std::map<std::string, Rational>& point) {
    std::map<SymbolId, Rational> values;
    for (const auto& [name, v] : point) values[table.require(name)] = v;
    for (const auto& [sym, value] : sol.equalities) {
        if (!values.count(sym)) return false;
        if (value.evaluate(values) != values.at(sym)) return false;
    }
    for (const Constraint& c : sol.inequalities) {
        Rational v = c.expr.evaluate(values);
        if (c.rel == Constraint::Rel::Ne && v == 0) return false;
        if (c.rel == Constraint::Rel::Ge && v < 0) return false;
        if (c.rel == Constraint::Rel::Gt && v <= 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("parametric feedback construction") {
    SUBCASE("explicit rigid-body template") {
        SystemDocument doc = load_system("rigid_body.json");
        REQUIRE(doc.feedback_template.has_value());
        FeedbackFamily family = build_parametric_feedback(doc.table, *doc.feedback_template);
        REQUIRE(family.laws.size() == 2);
        Polynomial u1_expected =
            Polynomial::term(mono({{1, 1}}), ParamRat::symbol(doc.table.require("A1"))) +
            Polynomial::term(mono({{2, 1}}), ParamRat::symbol(doc.table.require("B1"))) +
            Polynomial::term(mono({{3, 1}}), ParamRat::symbol(doc.table.require("G1"))) +
            Polynomial::term(mono({{2, 1}, {3, 1}}), ParamRat::symbol(doc.table.require("D1")));
        CHECK(family.laws[0] == u1_expected);
        CHECK(family.laws[1].coefficient_of(mono({{1, 1}, {3, 1}})) ==
              ParamRat::symbol(doc.table.require("D2")));
        // Origin is preserved.
        for (const Polynomial& law : family.laws)
            CHECK(law.coefficient_of(Monomial{}).is_zero());
    }

    SUBCASE("single state, single input, degree one") {
        SymbolTable table = testutil::states(1);
        table.add_input("u1");
        FeedbackFamily family = build_parametric_feedback(table, 1);
        REQUIRE(family.laws.size() == 1);
        CHECK(family.laws[0] ==
              Polynomial::term(mono({{1, 1}}), ParamRat::symbol(table.require("A1"))));
    }

    SUBCASE("dense degree-2 template in two states has five parameters") {
        SymbolTable table = testutil::states(2);
        table.add_input("u1");
        FeedbackFamily family = build_parametric_feedback(table, 2);
        CHECK(family.params.size() == 5);
        FeedbackTemplate tmpl = full_template(table, 2);
        std::vector<Monomial> expected{mono({{1, 1}}), mono({{2, 1}}), mono({{1, 2}}),
                                       mono({{1, 1}, {2, 1}}), mono({{2, 2}})};
        CHECK(tmpl[0] == expected);
    }

    SUBCASE("degree below one is rejected") {
        SymbolTable table = testutil::states(2);
        table.add_input("u1");
        CHECK_THROWS(build_parametric_feedback(table, 0));
    }
}

TEST_CASE("Lyapunov derivative") {
    SUBCASE("rigid body with linear-plus-bilinear laws") {
        SystemDocument doc = load_system("rigid_body.json");
        FeedbackFamily family = build_parametric_feedback(doc.table, *doc.feedback_template);
        LyapunovSpec lyap = *doc.lyapunov;
        Polynomial v = lyapunov_derivative(doc.system, lyap, family.laws, doc.table);
        // V = -2*x1*Phi1 - 2*x2*Phi2 - 2*x3*Phi3 with the inputs closed.
        std::map<int, Polynomial> closing{{4, family.laws[0]}, {5, family.laws[1]}};
        Polynomial expected;
        for (int i = 1; i <= 3; ++i)
            expected = expected - Polynomial::variable(i).scaled(ParamRat{q(2)}) *
                                      doc.system.rhs[static_cast<std::size_t>(i - 1)]
                                          .substituted_vars(closing);
        CHECK(v == expected);
    }

    SUBCASE("zero system gives zero") {
        SymbolTable table = testutil::states(2);
        table.add_input("u1");
        PolySystem sys{2, 1, {Polynomial{}, Polynomial{}}};
        Polynomial v = lyapunov_derivative(sys, default_lyapunov(table),
                                           {Polynomial::variable(1)}, table);
        CHECK(v.is_zero());
    }

    SUBCASE("dimension mismatch is an error") {
        SymbolTable table = testutil::states(2);
        table.add_input("u1");
        PolySystem sys{2, 1, {Polynomial::variable(3), Polynomial{}}};
        CHECK_THROWS(lyapunov_derivative(sys, default_lyapunov(table), {}, table));
    }
}

TEST_CASE("closed-loop derivative matches the certified expansion exactly") {
    // u1 = 2x + y + xy/2, u2 = 5/4 x + 2y turn V into twice the four-term
    // even expansion; the scale factor 2 is our gradient convention.
    SystemDocument doc = load_system("planar_cubic.json");
    std::vector<Polynomial> laws{parse_poly("2*x + y + 1/2*x*y", doc.table),
                                 parse_poly("5/4*x + 2*y", doc.table)};
    Polynomial v = lyapunov_derivative(doc.system, *doc.lyapunov, laws, doc.table);
    Polynomial quartic = parse_poly(
        "20375/663552*x^4 + 2*(659/1152*x + y)^2*x^2 + x^2 + 3*(1/6*x + y)^4", doc.table);
    CHECK(v == quartic.scaled(ParamRat{q(2)}));

    // With u1 = x + y + xy/2 the identity fails by exactly -(25/4)*x^3 at our
    // scale; kept as a regression pin on the discrepancy.
    std::vector<Polynomial> off{parse_poly("x + y + 1/2*x*y", doc.table), laws[1]};
    Polynomial v_off = lyapunov_derivative(doc.system, *doc.lyapunov, off, doc.table);
    CHECK(v_off - v == parse_poly("-25/4*x^3", doc.table));
}

TEST_CASE("linearization pairs") {
    SUBCASE("rigid body: A vanishes, B selects the actuated rows") {
        SystemDocument doc = load_system("rigid_body.json");
        JacobianPair jac = linearize(doc.system, doc.table);
        for (const auto& row : jac.a)
            for (const ParamRat& entry : row) CHECK(entry.is_zero());
        CHECK(jac.b[0][0] == ParamRat{q(1)});
        CHECK(jac.b[1][1] == ParamRat{q(1)});
        CHECK(jac.b[2][0].is_zero());
        CHECK(jac.b[2][1].is_zero());
    }

    SUBCASE("scalar linear system") {
        SymbolTable table = testutil::states(1);
        table.add_input("u1");
        PolySystem sys{1, 1, {parse_poly("2*x1 + u1", table)}};
        JacobianPair jac = linearize(sys, table);
        CHECK(jac.a[0][0] == ParamRat{q(2)});
        CHECK(jac.b[0][0] == ParamRat{q(1)});
    }

    SUBCASE("planar cubic system") {
        SystemDocument doc = load_system("planar_cubic.json");
        JacobianPair jac = linearize(doc.system, doc.table);
        CHECK(jac.a[0][0] == ParamRat{q(4)});
        CHECK(jac.a[0][1] == ParamRat{q(8)});
        CHECK(jac.a[1][0].is_zero());
        CHECK(jac.a[1][1].is_zero());
        CHECK(jac.b[0][0].is_zero());
        CHECK(jac.b[0][1] == ParamRat{q(-4)});
        CHECK(jac.b[1][0].is_zero());
        CHECK(jac.b[1][1].is_zero());
    }
}

TEST_CASE("template escalation sequences") {
    SUBCASE("rigid body mirrors its bilinear terms") {
        SystemDocument doc = load_system("rigid_body.json");
        auto seq = suggest_templates(doc.system, doc.table, 2);
        REQUIRE(seq.size() >= 2);
        std::vector<Monomial> linear{mono({{1, 1}}), mono({{2, 1}}), mono({{3, 1}})};
        CHECK(seq[0] == FeedbackTemplate{linear, linear});
        std::vector<Monomial> u1 = linear, u2 = linear;
        u1.push_back(mono({{2, 1}, {3, 1}}));
        u2.push_back(mono({{1, 1}, {3, 1}}));
        CHECK(seq[1] == FeedbackTemplate{u1, u2});
    }

    SUBCASE("degree cap one leaves only the linear template") {
        SystemDocument doc = load_system("rigid_body.json");
        auto seq = suggest_templates(doc.system, doc.table, 1);
        REQUIRE(seq.size() == 1);
        CHECK(seq[0][0].size() == 3);
    }

    SUBCASE("planar system includes the cross-product template") {
        SystemDocument doc = load_system("planar_cubic.json");
        auto seq = suggest_templates(doc.system, doc.table, 2);
        FeedbackTemplate cross{
            {mono({{1, 1}}), mono({{2, 1}}), mono({{1, 1}, {2, 1}})},
            {mono({{1, 1}}), mono({{2, 1}}), mono({{1, 1}, {2, 1}})}};
        CHECK(std::find(seq.begin(), seq.end(), cross) != seq.end());
    }
}

TEST_CASE("synthesis: single integrator") {
    SystemDocument doc = load_system("single_integrator.json");
    SynthesisOutcome out =
        synthesize(doc.system, *doc.lyapunov, *doc.feedback_template, doc.table);
    REQUIRE(out.ok());
    const FeedbackFamily& family = *out.family;
    // Family u1 = A1*x1 constrained by -2*A1 >= 0; witness strictly negative.
    CHECK(family.constraints.equalities.empty());
    REQUIRE(family.constraints.inequalities.size() == 1);
    CHECK(family.constraints.inequalities[0].expr ==
          ParamRat{q(-2)} * ParamRat::symbol(doc.table.require("A1")));
    REQUIRE(family.constraints.witness.has_value());
    CHECK(family.constraints.witness->at(doc.table.require("A1")) < 0);
    REQUIRE(family.witness_laws.has_value());
}

TEST_CASE("synthesis: planar cubic family contains the reference witness") {
    SystemDocument doc = load_system("planar_cubic.json");
    SynthesisOutcome out =
        synthesize(doc.system, *doc.lyapunov, *doc.feedback_template, doc.table);
    REQUIRE(out.ok());
    const FeedbackFamily& family = *out.family;
    CHECK(family.strict_definite);

    std::map<std::string, Rational> reference{
        {"A1", q(2)}, {"A2", q(5, 4)}, {"B1", q(1)},
        {"B2", q(2)}, {"G1", q(1, 2)}, {"G2", q(0)}};
    // Extend with the solved W values at that point.
    std::map<SymbolId, Rational> values;
    for (const auto& [name, v] : reference) values[doc.table.require(name)] = v;
    for (SymbolId s : family.constraints.free_params)
        if (!values.count(s)) values[s] = q(0);
    for (auto it = family.constraints.equalities.rbegin();
         it != family.constraints.equalities.rend(); ++it)
        values[it->first] = it->second.evaluate(values);
    std::map<std::string, Rational> full;
    for (const auto& [sym, v] : values) full[doc.table.name(sym)] = v;
    CHECK(family_contains(family.constraints, doc.table, full));

    // Laws specialize to u1 = 2x + B1*y + G1*x*y, u2 = 5/(4 B1) x + 2y.
    auto bindings = family.constraints.equality_bindings();
    Polynomial u2 = family.laws[1].substituted_params(bindings);
    ParamRat b1 = ParamRat::symbol(doc.table.require("B1"));
    CHECK(u2.coefficient_of(mono({{1, 1}})) == ParamRat{q(5, 4)} / b1);
    CHECK(u2.coefficient_of(mono({{2, 1}})) == ParamRat{q(2)});

    // At B1 = 1, G1 = 1/2 the certificate for V collapses to exactly twice
    // the known four-term even expansion.
    std::map<SymbolId, ParamRat> at_point{{doc.table.require("B1"), ParamRat{q(1)}},
                                          {doc.table.require("G1"), ParamRat{q(1, 2)}}};
    Polynomial sos_value = family.sos.substituted_params(at_point).expand();
    Polynomial quartic = parse_poly(
        "20375/663552*x^4 + 2*(659/1152*x + y)^2*x^2 + x^2 + 3*(1/6*x + y)^4", doc.table);
    CHECK(sos_value == quartic.scaled(ParamRat{q(2)}));
}

TEST_CASE("synthesis: rigid body constraints match the derived family") {
    SystemDocument doc = load_system("rigid_body.json");
    SynthesisOutcome out =
        synthesize(doc.system, *doc.lyapunov, *doc.feedback_template, doc.table);
    REQUIRE(out.ok());
    const SolutionSet& sol = out.family->constraints;

    // G1 = 0, G2 = 0 and D1 + D2 = -3 hold identically under the equalities.
    auto bindings = sol.equality_bindings();
    auto reduced = [&](const std::string& name) {
        return ParamRat::symbol(doc.table.require(name)).substituted(bindings);
    };
    CHECK(reduced("G1").is_zero());
    CHECK(reduced("G2").is_zero());
    CHECK((reduced("D1") + reduced("D2") + ParamRat{q(3)}).is_zero());

    // B2 < 0 semantics: -2*B2 >= 0 plus a B2-nonvanishing side condition.
    std::map<std::string, Rational> inside{{"A1", q(-1)}, {"B1", q(0)}, {"G1", q(0)},
                                           {"D1", q(0)},  {"A2", q(0)}, {"B2", q(-1)},
                                           {"G2", q(0)},  {"D2", q(-3)}};
    std::map<std::string, Rational> b2_zero = inside;
    b2_zero["B2"] = q(0);
    std::map<std::string, Rational> b2_pos = inside;
    b2_pos["B2"] = q(1);
    auto extend = [&](std::map<std::string, Rational> point) {
        std::map<SymbolId, Rational> values;
        for (const auto& [name, v] : point) values[doc.table.require(name)] = v;
        for (SymbolId s : sol.free_params)
            if (!values.count(s)) values[s] = q(0);
        for (auto it = sol.equalities.rbegin(); it != sol.equalities.rend(); ++it) {
            try {
                values[it->first] = it->second.evaluate(values);
            } catch (const std::domain_error&) {
                return std::map<std::string, Rational>{};  // vanishing denominator
            }
        }
        std::map<std::string, Rational> full;
        for (const auto& [sym, v] : values) full[doc.table.name(sym)] = v;
        return full;
    };
    CHECK(family_contains(sol, doc.table, extend(inside)));
    CHECK_FALSE(family_contains(sol, doc.table, extend(b2_pos)));
    CHECK(extend(b2_zero).empty());  // B2 = 0 vanishes a solved denominator

    // A1 < (A2+B1)^2/(4 B2) boundary: with A2=B1=0, B2=-1 the bound is 0.
    std::map<std::string, Rational> a1_bad = inside;
    a1_bad["A1"] = q(1, 2);
    CHECK_FALSE(family_contains(sol, doc.table, extend(a1_bad)));

    // Equilibrium preservation for the witness closed loop.
    REQUIRE(out.family->witness_laws.has_value());
    std::map<int, Rational> origin{{1, q(0)}, {2, q(0)}, {3, q(0)}};
    std::map<int, Polynomial> closing;
    for (int j = 0; j < 2; ++j) {
        CHECK((*out.family->witness_laws)[static_cast<std::size_t>(j)]
                  .evaluate(origin, {})
                  == q(0));
        closing[3 + j + 1] = (*out.family->witness_laws)[static_cast<std::size_t>(j)];
    }
    for (const Polynomial& phi : doc.system.rhs)
        CHECK(phi.substituted_vars(closing).evaluate(origin, {}) == q(0));
}

TEST_CASE("synthesis with symbolic plant constants reports a witness-free family") {
    SystemDocument doc = load_system("rigid_body_symbolic.json");
    LyapunovSpec lyap = default_lyapunov(doc.table);
    SynthesisOutcome out = synthesize(doc.system, lyap, *doc.feedback_template, doc.table);
    REQUIRE(out.ok());
    CHECK_FALSE(out.family->constraints.witness.has_value());
    // D2 = -D1 - a1 - a2 - a3 keeps the Delta sum pinned to the plant constants.
    auto bindings = out.family->constraints.equality_bindings();
    ParamRat sum = (ParamRat::symbol(doc.table.require("D1")) +
                    ParamRat::symbol(doc.table.require("D2")))
                       .substituted(bindings);
    ParamRat expected = -(ParamRat::symbol(doc.table.require("a1")) +
                          ParamRat::symbol(doc.table.require("a2")) +
                          ParamRat::symbol(doc.table.require("a3")));
    CHECK(sum == expected);
}

TEST_CASE("a second-degree law tames the cross term the linear one cannot") {
    // xdot1 = x2^2, xdot2 = u1: only the x1*x2 monomial of u1 reaches the
    // stray x1*x2^2 coefficient of V, so escalation past linear is required.
    SystemDocument doc = parse_system(R"({
        "states": ["x1", "x2"], "inputs": ["u1"], "rhs": ["x2^2", "u1"]
    })");
    auto seq = suggest_templates(doc.system, doc.table, 2);
    SynthesisOutcome linear =
        synthesize(doc.system, default_lyapunov(doc.table), seq[0], doc.table);
    CHECK_FALSE(linear.ok());
    SynthesisOutcome out = synthesize_auto(doc.system, default_lyapunov(doc.table),
                                           doc.table, 2);
    REQUIRE(out.ok());
    // The cross-product template {x1, x2, x1*x2} wins; its x1*x2 coefficient
    // is pinned to -1 and the result is only semidefinite (V misses x1).
    CHECK(out.family->used_template[0].size() == 3);
    auto bindings = out.family->constraints.equality_bindings();
    ParamRat g = ParamRat::symbol(doc.table.require("G1")).substituted(bindings);
    CHECK(g == ParamRat{q(-1)});
    CHECK_FALSE(out.family->strict_definite);
}

TEST_CASE("synthesis fails cleanly on an unstabilizable direction") {
    // No input at all and an unstable drift: every template collapses to the
    // empty one and the even coefficient -2*x1^2 stays negative.
    SystemDocument doc = parse_system(R"({
        "states": ["x1"], "rhs": ["x1"]
    })");
    SynthesisOutcome out = synthesize_auto(doc.system, default_lyapunov(doc.table),
                                           doc.table, 2);
    CHECK_FALSE(out.ok());
    CHECK(out.reason.find("no stabilizer") != std::string::npos);
}

TEST_CASE("linear template fails on the rigid body, mirror template succeeds") {
    SystemDocument doc = load_system("rigid_body.json");
    auto seq = suggest_templates(doc.system, doc.table, 2);
    SynthesisOutcome linear =
        synthesize(doc.system, *doc.lyapunov, seq[0], doc.table);
    CHECK_FALSE(linear.ok());
    SynthesisOutcome mirrored =
        synthesize(doc.system, *doc.lyapunov, seq[1], doc.table);
    CHECK(mirrored.ok());

    SystemDocument doc2 = load_system("rigid_body.json");
    SynthesisOutcome automatic =
        synthesize_auto(doc2.system, *doc2.lyapunov, doc2.table, 2);
    CHECK(automatic.ok());
}
