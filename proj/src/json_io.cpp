#include "polycert/json_io.hpp"

#include <json.hpp>

#include "polycert/parse.hpp"
#include "polycert/print.hpp"

namespace polycert {

using ordered_json = nlohmann::ordered_json;

namespace {

Monomial single_monomial(const std::string& text, const SymbolTable& table) {
    Polynomial p = parse_poly(text, table);
    if (p.term_count() != 1)
        throw std::invalid_argument("feedback template entry is not a single monomial: " + text);
    const auto& [m, c] = *p.terms().begin();
    if (!(c.is_constant() && c.constant_value() == 1))
        throw std::invalid_argument("feedback template entry must have coefficient 1: " + text);
    return m;
}

ordered_json constraints_json(const SolutionSet& s, const SymbolTable& table) {
    ordered_json eq = ordered_json::object();
    for (const auto& [sym, value] : s.equalities)
        eq[table.name(sym)] = to_string(value, table);
    ordered_json ineq = ordered_json::array();
    for (const Constraint& c : s.inequalities) {
        const char* rel = c.rel == Constraint::Rel::Ne ? "!=0"
                          : c.rel == Constraint::Rel::Gt ? ">0"
                                                         : ">=0";
        ineq.push_back({{"expr", to_string(c.expr, table)}, {"rel", rel}});
    }
    ordered_json frees = ordered_json::array();
    for (SymbolId sym : s.free_params) frees.push_back(table.name(sym));
    ordered_json out;
    out["equalities"] = std::move(eq);
    out["inequalities"] = std::move(ineq);
    out["free"] = std::move(frees);
    if (s.witness) {
        ordered_json w = ordered_json::object();
        for (const auto& [sym, value] : *s.witness)
            w[table.name(sym)] = rational_to_string(value);
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

ordered_json sos_json(const SumOfSquares& sos, const SymbolTable& table) {
    ordered_json terms = ordered_json::array();
    for (const SosTerm& t : sos.terms) {
        ordered_json comps = ordered_json::array();
        for (const SosComponent& c : t.components)
            comps.push_back({{"form", to_string(c.form, table)}, {"exponent", c.exponent}});
        terms.push_back(
            {{"coefficient", to_string(t.coefficient, table)}, {"components", std::move(comps)}});
    }
    ordered_json out;
    out["text"] = to_string(sos, table);
    out["terms"] = std::move(terms);
    return out;
}

}  // namespace

SystemDocument parse_system(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(std::string("system file is not valid JSON: ") + err.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("system file must be a JSON object");
    if (!doc.contains("states") || !doc["states"].is_array() || doc["states"].empty())
        throw std::invalid_argument("system file needs a nonempty \"states\" list");
    if (!doc.contains("rhs") || !doc["rhs"].is_array())
        throw std::invalid_argument("system file needs an \"rhs\" list");

    SystemDocument out;
    for (const auto& name : doc["states"]) out.table.add_state(name.get<std::string>());
    if (doc.contains("inputs"))
        for (const auto& name : doc["inputs"]) out.table.add_input(name.get<std::string>());
    if (doc.contains("constants"))
        for (const auto& name : doc["constants"])
            out.table.add_plant_constant(name.get<std::string>());

    out.system.n = out.table.n_states();
    out.system.m = out.table.n_inputs();
    if (doc["rhs"].size() != doc["states"].size())
        throw std::invalid_argument("rhs length does not match the number of states");
    for (const auto& expr : doc["rhs"])
        out.system.rhs.push_back(parse_poly(expr.get<std::string>(), out.table));
    for (int i = 0; i < out.system.n; ++i)
        if (!out.system.rhs[static_cast<std::size_t>(i)].coefficient_of(Monomial{}).is_zero())
            throw std::invalid_argument("equation " + std::to_string(i + 1) +
                                        " has a free term; the origin must be an equilibrium");
    out.system.validate();

    if (doc.contains("lyapunov"))
        out.lyapunov = LyapunovSpec{parse_poly(doc["lyapunov"].get<std::string>(), out.table)};
    if (doc.contains("feedback_template")) {
        const auto& tmpl = doc["feedback_template"];
        if (!tmpl.is_array() || tmpl.size() != static_cast<std::size_t>(out.system.m))
            throw std::invalid_argument("feedback_template must list monomials for every input");
        FeedbackTemplate ft;
        for (const auto& list : tmpl) {
            std::vector<Monomial> monomials;
            for (const auto& entry : list)
                monomials.push_back(single_monomial(entry.get<std::string>(), out.table));
            ft.push_back(std::move(monomials));
        }
        out.feedback_template = std::move(ft);
    }
    if (doc.contains("degree")) out.degree = doc["degree"].get<int>();
    return out;
}

std::vector<Polynomial> parse_feedback_laws(const std::string& json_text,
                                            const SymbolTable& table, int m) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(std::string("feedback file is not valid JSON: ") + err.what());
    }
    if (!doc.is_object() || !doc.contains("laws") || !doc["laws"].is_array())
        throw std::invalid_argument("feedback file needs a \"laws\" list");
    if (doc["laws"].size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("feedback file must provide one law per input");
    std::vector<Polynomial> laws;
    for (const auto& expr : doc["laws"])
        laws.push_back(parse_poly(expr.get<std::string>(), table));
    return laws;
}

std::string factorization_to_json(const FormalFactorization& f, const SymbolTable& table) {
    ordered_json out;
    out["schema_version"] = 1;
    out["kind"] = "factorization";
    ordered_json vars = ordered_json::array();
    for (int i = 1; i <= table.n_states(); ++i)
        vars.push_back(table.name(table.variable_at(i)));
    out["variables"] = std::move(vars);
    ordered_json params = ordered_json::array();
    for (SymbolId s : f.params) params.push_back(table.name(s));
    out["parameters"] = std::move(params);
    ordered_json factors = ordered_json::array();
    for (const FactorTerm& t : f.factors) {
        ordered_json forms = ordered_json::array();
        for (const LinearForm& form : t.forms)
            forms.push_back(to_string(form.to_polynomial(), table));
        factors.push_back({{"coefficient", to_string(t.coefficient, table)},
                           {"exponents", t.exponents},
                           {"forms", std::move(forms)}});
    }
    out["factors"] = std::move(factors);
    out["remainder"] = to_string(f.remainder, table);
    return out.dump(2);
}

std::string certificate_to_json(const Certificate& cert, const Polynomial& input,
                                const SymbolTable& table) {
    ordered_json out;
    out["schema_version"] = 1;
    out["kind"] = "sos_certificate";
    out["polynomial"] = to_string(input, table);
    out["solution"] = constraints_json(cert.solution, table);
    out["sos"] = sos_json(cert.sos, table);
    out["strict_positive_definite"] = cert.strict_definite;
    return out.dump(2);
}

std::string no_certificate_json(const std::string& reason) {
    ordered_json out;
    out["schema_version"] = 1;
    out["kind"] = "no_certificate";
    out["reason"] = reason;
    return out.dump(2);
}

std::string family_to_json(const FeedbackFamily& family, const SymbolTable& table,
                           const JacobianPair* linearization) {
    ordered_json out;
    out["schema_version"] = 1;
    out["kind"] = "feedback_family";
    if (linearization) {
        auto matrix = [&](const std::vector<std::vector<ParamRat>>& m) {
            ordered_json rows = ordered_json::array();
            for (const auto& row : m) {
                ordered_json r = ordered_json::array();
                for (const ParamRat& entry : row) r.push_back(to_string(entry, table));
                rows.push_back(std::move(r));
            }
            return rows;
        };
        out["linearization"] = {{"A", matrix(linearization->a)}, {"B", matrix(linearization->b)}};
    }
    ordered_json laws = ordered_json::array();
    for (const Polynomial& law : family.laws) laws.push_back(to_string(law, table));
    out["laws"] = std::move(laws);
    ordered_json claws = ordered_json::array();
    for (const Polynomial& law : family.constrained_laws) claws.push_back(to_string(law, table));
    out["constrained_laws"] = std::move(claws);
    out["solution"] = constraints_json(family.constraints, table);
    if (family.witness_laws) {
        ordered_json wlaws = ordered_json::array();
        for (const Polynomial& law : *family.witness_laws) wlaws.push_back(to_string(law, table));
        out["witness_laws"] = std::move(wlaws);
    } else {
        out["witness_laws"] = nullptr;
    }
    out["lyapunov_derivative"] = to_string(family.lyapunov_derivative, table);
    out["sos"] = sos_json(family.sos, table);
    out["strict_positive_definite"] = family.strict_definite;
    return out.dump(2);
}

}  // namespace polycert
