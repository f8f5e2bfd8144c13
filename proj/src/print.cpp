#include "polycert/print.hpp"

#include <sstream>

namespace polycert {

namespace {

bool needs_parens(const std::string& s) {
    return s.find_first_of("+-*/^ ") != std::string::npos;
}

std::string wrap(const std::string& s) { return needs_parens(s) ? "(" + s + ")" : s; }

// Joins term pieces with " + " / " - ", folding a leading minus sign.
std::string join_terms(const std::vector<std::string>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const std::string& p = pieces[i];
        if (i == 0) {
            out = p;
        } else if (!p.empty() && p[0] == '-') {
            out += " - " + p.substr(1);
        } else {
            out += " + " + p;
        }
    }
    return out;
}

std::string param_mono_str(const ParamMonomial& m, const SymbolTable& table) {
    if (m.is_constant()) return "1";
    std::string out;
    for (const auto& [id, exp] : m.entries()) {
        if (!out.empty()) out += "*";
        out += table.name(id);
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
}

}  // namespace

std::string to_string(const Monomial& m, const SymbolTable& table) {
    if (m.is_constant()) return "1";
    std::string out;
    for (const auto& [pos, exp] : m.entries()) {
        if (!out.empty()) out += "*";
        out += table.name(table.variable_at(pos));
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
}

std::string to_string(const ParamPoly& p, const SymbolTable& table) {
    if (p.is_zero()) return "0";
    std::vector<std::string> pieces;
    for (const auto& [m, c] : p.terms()) {
        std::string piece;
        std::string mono = param_mono_str(m, table);
        if (m.is_constant()) {
            piece = rational_to_string(c);
        } else if (c == 1) {
            piece = mono;
        } else if (c == -1) {
            piece = "-" + mono;
        } else {
            piece = rational_to_string(c) + "*" + mono;
        }
        pieces.push_back(std::move(piece));
    }
    return join_terms(pieces);
}

std::string to_string(const ParamRat& r, const SymbolTable& table) {
    if (r.is_zero()) return "0";
    if (r.is_polynomial()) {
        if (r.num().is_constant()) return rational_to_string(r.constant_value());
        return to_string(r.num(), table);
    }
    return wrap(to_string(r.num(), table)) + "/" + wrap(to_string(r.den(), table));
}

std::string to_string(const Polynomial& p, const SymbolTable& table) {
    if (p.is_zero()) return "0";
    std::vector<std::string> pieces;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Monomial& m = it->first;
        const ParamRat& c = it->second;
        std::string mono = to_string(m, table);
        std::string piece;
        if (c.is_constant()) {
            Rational value = c.constant_value();
            std::string sign = value < 0 ? "-" : "";
            Rational mag = abs(value);
            if (m.is_constant())
                piece = sign + rational_to_string(mag);
            else if (mag == 1)
                piece = sign + mono;
            else
                piece = sign + rational_to_string(mag) + "*" + mono;
        } else if (c.is_polynomial() && c.num().term_count() == 1) {
            // Single parameter term: print inline, sign first.
            const auto& [pm, r] = *c.num().terms().begin();
            std::string sign = r < 0 ? "-" : "";
            Rational mag = abs(r);
            piece = sign;
            if (mag != 1) piece += rational_to_string(mag) + "*";
            piece += param_mono_str(pm, table);
            if (!m.is_constant()) piece += "*" + mono;
        } else {
            std::string coeff = "(" + to_string(c, table) + ")";
            piece = m.is_constant() ? coeff : coeff + "*" + mono;
        }
        pieces.push_back(std::move(piece));
    }
    return join_terms(pieces);
}

namespace {

std::string power_piece(const Polynomial& form, int exponent, const SymbolTable& table) {
    // A bare variable prints without parentheses.
    if (form.term_count() == 1) {
        const auto& [m, c] = *form.terms().begin();
        if (c.is_constant() && c.constant_value() == 1 && m.entries().size() == 1 &&
            m.entries()[0].second == 1) {
            std::string base = table.name(table.variable_at(m.entries()[0].first));
            return exponent == 1 ? base : base + "^" + std::to_string(exponent);
        }
    }
    std::string base = "(" + to_string(form, table) + ")";
    return exponent == 1 ? base : base + "^" + std::to_string(exponent);
}

std::string coefficient_prefix(const ParamRat& c, const SymbolTable& table, bool has_tail,
                               bool* negative) {
    *negative = false;
    if (c.is_constant()) {
        Rational value = c.constant_value();
        *negative = value < 0;
        Rational mag = abs(value);
        if (mag == 1 && has_tail) return "";
        return rational_to_string(mag) + (has_tail ? "*" : "");
    }
    return "(" + to_string(c, table) + ")" + (has_tail ? "*" : "");
}

}  // namespace

std::string to_string(const SumOfSquares& sos, const SymbolTable& table) {
    if (sos.terms.empty()) return "0";
    std::vector<std::string> pieces;
    for (const SosTerm& t : sos.terms) {
        bool neg = false;
        std::string piece = coefficient_prefix(t.coefficient, table, !t.components.empty(), &neg);
        for (std::size_t i = 0; i < t.components.size(); ++i) {
            if (i > 0) piece += "*";
            piece += power_piece(t.components[i].form, t.components[i].exponent, table);
        }
        if (neg) piece = "-" + piece;
        pieces.push_back(std::move(piece));
    }
    return join_terms(pieces);
}

std::string to_string(const FormalFactorization& f, const SymbolTable& table) {
    std::ostringstream out;
    out << "factors: " << f.factors.size() << "\n";
    std::size_t mu = 0;
    for (const FactorTerm& t : f.factors) {
        ++mu;
        out << "  [" << mu << "] c = " << to_string(t.coefficient, table) << "\n      j = (";
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            if (i) out << ",";
            out << t.exponents[i];
        }
        out << ")\n      term = ";
        std::string prod;
        if (!t.exponents.empty() && t.exponents[0] > 0) {
            prod = power_piece(Polynomial::variable(1), t.exponents[0], table);
        }
        for (const LinearForm& form : t.forms) {
            if (!prod.empty()) prod += "*";
            int j = t.exponents[static_cast<std::size_t>(form.sigma - 1)];
            prod += power_piece(form.to_polynomial(), j, table);
        }
        out << (prod.empty() ? "1" : prod) << "\n";
    }
    out << "remainder = " << to_string(f.remainder, table) << "\n";
    out << "parameters =";
    if (f.params.empty()) out << " (none)";
    for (SymbolId s : f.params) out << " " << table.name(s);
    out << "\n";
    return out.str();
}

std::string to_string(const EvaluatedFactorization& f, const SymbolTable& table) {
    std::vector<std::string> pieces;
    for (const EvaluatedTerm& t : f.terms) {
        bool has_tail = (!t.exponents.empty() && t.exponents[0] > 0) || !t.forms.empty();
        bool neg = false;
        std::string piece = coefficient_prefix(t.coefficient, table, has_tail, &neg);
        std::string prod;
        if (!t.exponents.empty() && t.exponents[0] > 0)
            prod = power_piece(Polynomial::variable(1), t.exponents[0], table);
        for (std::size_t i = 0; i < t.forms.size(); ++i) {
            if (!prod.empty()) prod += "*";
            int j = t.exponents[static_cast<std::size_t>(t.form_positions[i] - 1)];
            prod += power_piece(t.forms[i], j, table);
        }
        piece += prod;
        if (neg) piece = "-" + piece;
        pieces.push_back(std::move(piece));
    }
    if (!f.remainder.is_zero()) pieces.push_back(to_string(f.remainder, table));
    return join_terms(pieces);
}

std::string to_string(const SolutionSet& s, const SymbolTable& table) {
    std::ostringstream out;
    out << "equalities:";
    if (s.equalities.empty()) out << " (none)";
    out << "\n";
    for (const auto& [sym, value] : s.equalities)
        out << "  " << table.name(sym) << " = " << to_string(value, table) << "\n";
    out << "constraints:";
    if (s.inequalities.empty()) out << " (none)";
    out << "\n";
    for (const Constraint& c : s.inequalities) {
        out << "  " << to_string(c.expr, table);
        switch (c.rel) {
            case Constraint::Rel::Ge: out << " >= 0"; break;
            case Constraint::Rel::Gt: out << " > 0"; break;
            case Constraint::Rel::Ne: out << " != 0"; break;
        }
        out << "\n";
    }
    out << "free:";
    if (s.free_params.empty()) out << " (none)";
    for (SymbolId sym : s.free_params) out << " " << table.name(sym);
    out << "\n";
    if (s.witness) {
        out << "witness:";
        for (const auto& [sym, value] : *s.witness)
            out << " " << table.name(sym) << "=" << rational_to_string(value);
        out << "\n";
    } else {
        out << "witness: (none; bind plant constants to obtain one)\n";
    }
    return out.str();
}

}  // namespace polycert
