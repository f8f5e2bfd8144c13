#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "polycert/feedback.hpp"
#include "polycert/json_io.hpp"
#include "polycert/simulate.hpp"

using namespace polycert;

namespace {

SystemDocument load_system(const std::string& name) {
    std::ifstream in(std::string(POLYCERT_DATA_DIR) + "/" + name);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_system(buffer.str());
}

double final_norm(const SimTrace& trace) {
    double acc = 0;
    for (double v : trace.states.back()) acc += v * v;
    return std::sqrt(acc);
}

}  // namespace

TEST_CASE("integrator matches the exponential decay solution") {
    SymbolTable table = testutil::states(1);
    PolySystem sys{1, 0, {parse_poly("-x1", table)}};
    SimOptions opt;
    opt.t_final = 1.0;
    SimTrace trace = simulate_closed_loop(sys, {}, default_lyapunov(table).L, {1.0}, opt);
    CHECK(std::abs(trace.states.back()[0] - std::exp(-1.0)) < 1e-8);

    // Equilibrium start stays put.
    SimTrace still = simulate_closed_loop(sys, {}, default_lyapunov(table).L, {0.0}, opt);
    for (const auto& state : still.states) CHECK(state[0] == 0.0);
}

TEST_CASE("halving the step cuts the global error by about sixteen") {
    SymbolTable table = testutil::states(1);
    PolySystem sys{1, 0, {parse_poly("-x1", table)}};
    auto error_at = [&](double dt) {
        SimOptions opt;
        opt.dt = dt;
        opt.t_final = 1.0;
        SimTrace trace = simulate_closed_loop(sys, {}, default_lyapunov(table).L, {1.0}, opt);
        return std::abs(trace.states.back()[0] - std::exp(-1.0));
    };
    double factor = error_at(0.1) / error_at(0.05);
    CHECK(factor >= 12.0);
    CHECK(factor <= 20.0);
}

TEST_CASE("certified planar closed loop: decrease holds, decay is cubic in y") {
    SystemDocument doc = load_system("planar_cubic.json");
    std::vector<Polynomial> laws{parse_poly("2*x + y + 1/2*x*y", doc.table),
                                 parse_poly("5/4*x + 2*y", doc.table)};
    SimTrace trace =
        simulate_closed_loop(doc.system, laws, doc.lyapunov->L, {1.0, 1.0}, SimOptions{});
    CHECK_FALSE(trace.diverged);
    CHECK(check_decrease(trace).ok);
    // L falls by two orders of magnitude, strictly decreasing away from 0.
    CHECK(trace.lyapunov.back() < 0.01 * trace.lyapunov.front());
    CHECK(std::abs(trace.states.back()[0]) < 1e-9);
    // The family forces B2 = 2, which makes the y-axis invariant with
    // ydot = -3 y^3, so y decays like 1/sqrt(6 t): about 0.0913 at t = 20.
    CHECK(final_norm(trace) == doctest::Approx(1.0 / std::sqrt(6.0 * 20.0)).epsilon(0.02));
}

TEST_CASE("uncontrolled planar system violates the decrease check") {
    SystemDocument doc = load_system("planar_cubic.json");
    std::vector<Polynomial> zero{Polynomial{}, Polynomial{}};
    SimTrace trace =
        simulate_closed_loop(doc.system, zero, doc.lyapunov->L, {0.1, 0.1}, SimOptions{});
    DecreaseReport report = check_decrease(trace);
    CHECK_FALSE(report.ok);
    CHECK(report.violation_amount > 0);
}

TEST_CASE("constant trace at the origin passes the decrease check") {
    SymbolTable table = testutil::states(1);
    PolySystem sys{1, 0, {parse_poly("-x1", table)}};
    SimOptions opt;
    opt.t_final = 0.1;
    SimTrace trace = simulate_closed_loop(sys, {}, default_lyapunov(table).L, {0.0}, opt);
    CHECK(check_decrease(trace).ok);
}

TEST_CASE("numeric dL/dt agrees with the symbolic derivative along the loop") {
    SystemDocument doc = load_system("planar_cubic.json");
    std::vector<Polynomial> laws{parse_poly("2*x + y + 1/2*x*y", doc.table),
                                 parse_poly("5/4*x + 2*y", doc.table)};
    Polynomial v = lyapunov_derivative(doc.system, *doc.lyapunov, laws, doc.table);
    SimOptions opt;
    opt.dt = 1e-5;
    opt.t_final = 0.5;
    SimTrace trace =
        simulate_closed_loop(doc.system, laws, doc.lyapunov->L, {1.0, 1.0}, opt);
    CompiledPoly minus_v = compile(-v);
    for (std::size_t k = 1; k + 1 < trace.times.size(); k += 2000) {
        double numeric =
            (trace.lyapunov[k + 1] - trace.lyapunov[k - 1]) / (2 * opt.dt);
        double symbolic = minus_v.eval(trace.states[k]);
        CHECK(std::abs(numeric - symbolic) <=
              1e-6 * std::max({1.0, std::abs(numeric), std::abs(symbolic)}));
        // The derivative itself never exceeds the decrease tolerance.
        CHECK(numeric <= 1e-6);
    }
}

TEST_CASE("divergence guard stops finite-time blowup with a diagnostic") {
    SymbolTable table = testutil::states(1);
    PolySystem sys{1, 0, {parse_poly("x1^2", table)}};
    SimOptions opt;
    opt.t_final = 2.0;
    SimTrace trace = simulate_closed_loop(sys, {}, default_lyapunov(table).L, {2.0}, opt);
    CHECK(trace.diverged);
    CHECK(!trace.diagnostic.empty());
    CHECK(trace.times.back() < 2.0);
}

TEST_CASE("CSV export carries the pinned header and one row per step") {
    SymbolTable table = testutil::states(2);
    table.add_input("u1");
    PolySystem sys{2, 1, {parse_poly("-x1 + u1", table), parse_poly("-x2", table)}};
    SimOptions opt;
    opt.dt = 0.01;
    opt.t_final = 0.05;
    SimTrace trace = simulate_closed_loop(sys, {Polynomial{}},
                                          default_lyapunov(table).L, {1.0, -1.0}, opt);
    std::string csv = trace_to_csv(trace, table);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "t,x1,x2,u1,L");
    int rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == 6);  // t = 0 plus five steps
}
