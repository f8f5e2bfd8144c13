// Command-line front end: factor, positivity, synthesize, simulate.
//
// Exit codes: 0 success / certificate found, 1 no certificate or a failed
// numeric check (inconclusive, not a disproof), 2 invalid input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "polycert/json_io.hpp"
#include "polycert/parse.hpp"
#include "polycert/print.hpp"
#include "polycert/simulate.hpp"

using namespace polycert;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

// Declares the variables of an expression: an explicit comma-separated list,
// or names of the form x<k> inferred from the text.
SymbolTable make_table(const std::string& expr, const std::string& vars_flag) {
    SymbolTable table;
    if (!vars_flag.empty()) {
        std::stringstream ss(vars_flag);
        std::string name;
        while (std::getline(ss, name, ',')) {
            if (!name.empty()) table.add_state(name);
        }
        if (table.n_states() == 0) throw std::invalid_argument("--vars lists no names");
        return table;
    }
    std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
    std::regex indexed("x([1-9][0-9]*)");
    int max_index = 0;
    for (auto it = std::sregex_iterator(expr.begin(), expr.end(), ident);
         it != std::sregex_iterator(); ++it) {
        std::smatch m;
        std::string name = it->str();
        if (std::regex_match(name, m, indexed)) {
            max_index = std::max(max_index, std::stoi(m[1].str()));
        } else {
            throw std::invalid_argument("variable '" + name +
                                        "' is not of the form x<k>; declare the order with --vars");
        }
    }
    if (max_index == 0) max_index = 1;  // constants still need one variable
    for (int i = 1; i <= max_index; ++i) table.add_state("x" + std::to_string(i));
    return table;
}

std::string expression_from(const std::string& expr_flag, const std::string& file_arg) {
    if (!expr_flag.empty() && !file_arg.empty())
        throw std::invalid_argument("give either --expr or a file, not both");
    if (!expr_flag.empty()) return expr_flag;
    if (!file_arg.empty()) return read_file(file_arg);
    throw std::invalid_argument("missing input: use --expr or pass a file");
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(rational_from_string(item));
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

int run_factor(const std::string& expr_flag, const std::string& file_arg,
               const std::string& vars_flag, const std::string& eval_flag,
               const std::string& format, const std::string& output) {
    std::string expr = expression_from(expr_flag, file_arg);
    SymbolTable table = make_table(expr, vars_flag);
    Polynomial p = parse_poly(expr, table);
    FormalFactorization f = formal_lf(p, table);
    std::ostringstream out;
    if (format == "json") {
        out << factorization_to_json(f, table) << "\n";
    } else {
        out << to_string(f, table);
    }
    if (!eval_flag.empty()) {
        std::vector<Rational> values = parse_rational_list(eval_flag);
        RuleSet rules;
        rules.rules.push_back({});
        for (const Rational& v : values) rules.rules.back().push_back(ParamRat{v});
        auto evaluated = evaluate(f, rules);
        out << "evaluated = " << to_string(evaluated.front(), table) << "\n";
    }
    write_output(out.str(), output);
    return 0;
}

int run_positivity(const std::string& expr_flag, const std::string& file_arg,
                   const std::string& vars_flag, const std::string& format,
                   const std::string& output, unsigned seed, std::size_t branch_cap) {
    std::string expr = expression_from(expr_flag, file_arg);
    SymbolTable table = make_table(expr, vars_flag);
    Polynomial p = parse_poly(expr, table);
    SolveOptions options;
    options.seed = seed;
    options.branch_cap = branch_cap;
    PosOutcome outcome = pos_check(p, table, {}, options);
    if (!outcome.ok()) {
        if (format == "json")
            write_output(no_certificate_json(outcome.reason) + "\n", output);
        else
            write_output("no certificate found (inconclusive): " + outcome.reason + "\n", output);
        return 1;
    }
    const Certificate& cert = *outcome.certificate;
    if (format == "json") {
        write_output(certificate_to_json(cert, p, table) + "\n", output);
    } else {
        std::ostringstream out;
        out << "sum of squares certificate\n";
        out << "sos = " << to_string(cert.sos, table) << "\n";
        out << to_string(cert.solution, table);
        out << "strict_positive_definite: " << (cert.strict_definite ? "yes" : "no") << "\n";
        write_output(out.str(), output);
    }
    return 0;
}

int run_synthesize(const std::string& system_path, int degree_flag,
                   const std::string& lyapunov_flag, const std::string& format,
                   const std::string& output, unsigned seed, std::size_t branch_cap) {
    SystemDocument doc = parse_system(read_file(system_path));
    LyapunovSpec lyap = doc.lyapunov ? *doc.lyapunov : default_lyapunov(doc.table);
    if (!lyapunov_flag.empty()) lyap = LyapunovSpec{parse_poly(lyapunov_flag, doc.table)};
    SolveOptions options;
    options.seed = seed;
    options.branch_cap = branch_cap;

    SynthesisOutcome outcome;
    if (doc.feedback_template) {
        outcome = synthesize(doc.system, lyap, *doc.feedback_template, doc.table, options);
    } else {
        int max_degree = degree_flag > 0 ? degree_flag : doc.degree.value_or(3);
        outcome = synthesize_auto(doc.system, lyap, doc.table, max_degree, options);
    }
    if (!outcome.ok()) {
        if (format == "json")
            write_output(no_certificate_json(outcome.reason) + "\n", output);
        else
            write_output("no certificate found (inconclusive): " + outcome.reason + "\n", output);
        return 1;
    }
    const FeedbackFamily& family = *outcome.family;
    if (format == "json") {
        JacobianPair jac = linearize(doc.system, doc.table);
        write_output(family_to_json(family, doc.table, &jac) + "\n", output);
    } else {
        std::ostringstream out;
        out << "feedback family\n";
        for (std::size_t j = 0; j < family.constrained_laws.size(); ++j)
            out << "  u" << (j + 1) << " = " << to_string(family.constrained_laws[j], doc.table)
                << "\n";
        out << to_string(family.constraints, doc.table);
        if (family.witness_laws) {
            out << "witness laws:\n";
            for (std::size_t j = 0; j < family.witness_laws->size(); ++j)
                out << "  u" << (j + 1) << " = "
                    << to_string((*family.witness_laws)[j], doc.table) << "\n";
        }
        out << "sos(V) = " << to_string(family.sos, doc.table) << "\n";
        out << "strict_positive_definite: " << (family.strict_definite ? "yes" : "no") << "\n";
        write_output(out.str(), output);
    }
    return 0;
}

int run_simulate(const std::string& system_path, const std::string& feedback_path,
                 const std::string& x0_flag, double t_final, double dt, double divergence,
                 const std::string& csv_path) {
    SystemDocument doc = parse_system(read_file(system_path));
    std::vector<Polynomial> laws =
        parse_feedback_laws(read_file(feedback_path), doc.table, doc.system.m);
    std::vector<double> x0 = parse_double_list(x0_flag);
    LyapunovSpec lyap = doc.lyapunov ? *doc.lyapunov : default_lyapunov(doc.table);

    SimOptions options;
    options.dt = dt;
    options.t_final = t_final;
    options.divergence_bound = divergence;
    SimTrace trace = simulate_closed_loop(doc.system, laws, lyap.L, x0, options);
    write_output(trace_to_csv(trace, doc.table), csv_path);
    if (trace.diverged) {
        std::cout << "divergence: " << trace.diagnostic << "\n";
        return 1;
    }
    DecreaseReport report = check_decrease(trace);
    if (!report.ok) {
        std::cout << "decrease check: VIOLATION at t=" << report.time
                  << " (increase " << report.violation_amount << ")\n";
        return 1;
    }
    std::cout << "decrease check: pass\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact polynomial factorization, positivity certificates and "
                 "Lyapunov feedback synthesis"};
    app.require_subcommand(1);

    std::string expr, file_arg, vars_flag, eval_flag, output;
    std::string format = "text";
    unsigned seed = 0;
    std::size_t branch_cap = 256;

    auto add_common = [&](CLI::App* cmd, bool with_expr) {
        if (with_expr) {
            cmd->add_option("--expr", expr, "polynomial expression");
            cmd->add_option("file", file_arg, "file holding the expression");
            cmd->add_option("--vars", vars_flag, "comma-separated variable order");
        }
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--output,-o", output, "write the document to a file");
        cmd->add_option("--seed", seed, "seed for randomized search");
        cmd->add_option("--branch-cap", branch_cap, "solver branch limit");
    };

    CLI::App* factor = app.add_subcommand("factor", "linear-like factorization of a polynomial");
    add_common(factor, true);
    factor->add_option("--eval", eval_flag, "comma-separated parameter values to evaluate");

    CLI::App* positivity = app.add_subcommand("positivity", "sum-of-squares positivity check");
    add_common(positivity, true);

    std::string system_path, lyapunov_flag;
    int degree_flag = 0;
    CLI::App* synth = app.add_subcommand("synthesize", "stabilizing feedback family synthesis");
    synth->add_option("system", system_path, "system description JSON file")->required();
    synth->add_option("--degree", degree_flag, "feedback degree cap for template escalation");
    synth->add_option("--lyapunov", lyapunov_flag, "Lyapunov function expression");
    add_common(synth, false);

    std::string feedback_path, x0_flag, csv_path = "trace.csv";
    double t_final = 20.0, dt = 1e-3, divergence = 1e6;
    CLI::App* sim = app.add_subcommand("simulate", "closed-loop simulation and decrease check");
    sim->add_option("system", system_path, "system description JSON file")->required();
    sim->add_option("--feedback", feedback_path, "feedback laws JSON file")->required();
    sim->add_option("--x0", x0_flag, "comma-separated initial state")->required();
    sim->add_option("--tfinal", t_final, "simulation horizon");
    sim->add_option("--dt", dt, "integration step");
    sim->add_option("--divergence", divergence, "abort when the state norm exceeds this bound");
    sim->add_option("--out", csv_path, "CSV trace path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (factor->parsed())
            return run_factor(expr, file_arg, vars_flag, eval_flag, format, output);
        if (positivity->parsed())
            return run_positivity(expr, file_arg, vars_flag, format, output, seed, branch_cap);
        if (synth->parsed())
            return run_synthesize(system_path, degree_flag, lyapunov_flag, format, output, seed,
                                  branch_cap);
        if (sim->parsed())
            return run_simulate(system_path, feedback_path, x0_flag, t_final, dt, divergence,
                                csv_path);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
