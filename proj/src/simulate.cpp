#include "polycert/simulate.hpp"

#include <cmath>
#include <sstream>

namespace polycert {

double CompiledPoly::eval(const std::vector<double>& vars) const {
    double acc = 0.0;
    for (const Term& t : terms) {
        double prod = t.coefficient;
        for (const auto& [idx, exp] : t.powers) {
            double v = vars[static_cast<std::size_t>(idx)];
            for (int i = 0; i < exp; ++i) prod *= v;
        }
        acc += prod;
    }
    return acc;
}

CompiledPoly compile(const Polynomial& p) {
    CompiledPoly out;
    std::map<SymbolId, double> no_params;
    for (const auto& [m, c] : p.terms()) {
        CompiledPoly::Term t;
        t.coefficient = c.evaluate_double(no_params);  // throws if symbols remain
        for (const auto& [pos, exp] : m.entries()) t.powers.emplace_back(pos - 1, exp);
        out.terms.push_back(std::move(t));
    }
    return out;
}

namespace {

double norm(const std::vector<double>& x, int n) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    return std::sqrt(acc);
}

}  // namespace

SimTrace simulate_closed_loop(const PolySystem& sys, const std::vector<Polynomial>& feedback,
                              const Polynomial& lyapunov, const std::vector<double>& x0,
                              const SimOptions& options) {
    if (options.dt <= 0) throw std::invalid_argument("time step must be positive");
    if (static_cast<int>(feedback.size()) != sys.m)
        throw std::invalid_argument("feedback law count does not match the input dimension");
    if (static_cast<int>(x0.size()) != sys.n)
        throw std::invalid_argument("initial state dimension mismatch");

    std::vector<CompiledPoly> rhs;
    for (const Polynomial& phi : sys.rhs) rhs.push_back(compile(phi));
    std::vector<CompiledPoly> laws;
    for (const Polynomial& law : feedback) {
        if (law.has_variables_above(sys.n))
            throw std::invalid_argument("feedback laws must depend on states only");
        laws.push_back(compile(law));
    }
    CompiledPoly lyap = compile(lyapunov);

    const int n = sys.n, m = sys.m;
    // Variable vector: states followed by inputs.
    auto derivative = [&](const std::vector<double>& state, std::vector<double>& dx) {
        std::vector<double> vars(static_cast<std::size_t>(n + m), 0.0);
        for (int i = 0; i < n; ++i) vars[static_cast<std::size_t>(i)] = state[static_cast<std::size_t>(i)];
        for (int j = 0; j < m; ++j)
            vars[static_cast<std::size_t>(n + j)] = laws[static_cast<std::size_t>(j)].eval(vars);
        for (int i = 0; i < n; ++i) dx[static_cast<std::size_t>(i)] = rhs[static_cast<std::size_t>(i)].eval(vars);
    };

    SimTrace trace;
    std::vector<double> x = x0;
    double t = 0.0;
    std::vector<double> k1(static_cast<std::size_t>(n)), k2(static_cast<std::size_t>(n)),
        k3(static_cast<std::size_t>(n)), k4(static_cast<std::size_t>(n)),
        tmp(static_cast<std::size_t>(n));

    auto record = [&]() {
        std::vector<double> vars(static_cast<std::size_t>(n + m), 0.0);
        for (int i = 0; i < n; ++i) vars[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
        std::vector<double> u(static_cast<std::size_t>(m), 0.0);
        for (int j = 0; j < m; ++j) {
            u[static_cast<std::size_t>(j)] = laws[static_cast<std::size_t>(j)].eval(vars);
            vars[static_cast<std::size_t>(n + j)] = u[static_cast<std::size_t>(j)];
        }
        trace.times.push_back(t);
        trace.states.push_back(x);
        trace.inputs.push_back(std::move(u));
        trace.lyapunov.push_back(lyap.eval(vars));
    };

    record();
    std::size_t steps = static_cast<std::size_t>(std::llround(options.t_final / options.dt));
    for (std::size_t step = 0; step < steps; ++step) {
        derivative(x, k1);
        for (int i = 0; i < n; ++i)
            tmp[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + 0.5 * options.dt * k1[static_cast<std::size_t>(i)];
        derivative(tmp, k2);
        for (int i = 0; i < n; ++i)
            tmp[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + 0.5 * options.dt * k2[static_cast<std::size_t>(i)];
        derivative(tmp, k3);
        for (int i = 0; i < n; ++i)
            tmp[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + options.dt * k3[static_cast<std::size_t>(i)];
        derivative(tmp, k4);
        for (int i = 0; i < n; ++i)
            x[static_cast<std::size_t>(i)] +=
                options.dt / 6.0 *
                (k1[static_cast<std::size_t>(i)] + 2.0 * k2[static_cast<std::size_t>(i)] +
                 2.0 * k3[static_cast<std::size_t>(i)] + k4[static_cast<std::size_t>(i)]);
        t = static_cast<double>(step + 1) * options.dt;

        bool finite = true;
        for (int i = 0; i < n; ++i)
            if (!std::isfinite(x[static_cast<std::size_t>(i)])) finite = false;
        if (!finite || norm(x, n) > options.divergence_bound) {
            trace.diverged = true;
            trace.diagnostic = "trajectory diverged; last good time t=" +
                               std::to_string(trace.times.back());
            return trace;
        }
        record();
    }
    return trace;
}

DecreaseReport check_decrease(const SimTrace& trace) {
    DecreaseReport report;
    for (std::size_t k = 0; k + 1 < trace.lyapunov.size(); ++k) {
        double delta = trace.lyapunov[k + 1] - trace.lyapunov[k];
        if (delta > 1e-7) {
            report.ok = false;
            report.first_violation = k + 1;
            report.violation_amount = delta;
            report.time = trace.times[k + 1];
            return report;
        }
    }
    return report;
}

std::string trace_to_csv(const SimTrace& trace, const SymbolTable& table) {
    std::ostringstream out;
    out.precision(15);
    out << "t";
    for (int i = 1; i <= table.n_states(); ++i) out << ",x" << i;
    for (int j = 1; j <= table.n_inputs(); ++j) out << ",u" << j;
    out << ",L\n";
    for (std::size_t k = 0; k < trace.times.size(); ++k) {
        out << trace.times[k];
        for (double v : trace.states[k]) out << "," << v;
        for (double v : trace.inputs[k]) out << "," << v;
        out << "," << trace.lyapunov[k] << "\n";
    }
    return out.str();
}

}  // namespace polycert
