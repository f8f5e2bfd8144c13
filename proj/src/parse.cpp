#include "polycert/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace polycert {
namespace {

enum class TokKind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Slash, End };

struct Token {
    TokKind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_space();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {TokKind::End, "", line, col};
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits.push_back(take());
            if (pos_ < text_.size() && text_[pos_] == '.')
                throw ParseError("float literals are not accepted; write an exact fraction p/q",
                                 line, col);
            return {TokKind::Number, digits, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ident.push_back(take());
            return {TokKind::Ident, ident, line, col};
        }
        take();
        switch (c) {
            case '+': return {TokKind::Plus, "+", line, col};
            case '-': return {TokKind::Minus, "-", line, col};
            case '*': return {TokKind::Star, "*", line, col};
            case '^': return {TokKind::Caret, "^", line, col};
            case '(': return {TokKind::LParen, "(", line, col};
            case ')': return {TokKind::RParen, ")", line, col};
            case '/': return {TokKind::Slash, "/", line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            take();
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(const std::string& text, const SymbolTable& table) : lexer_(text), table_(table) {
        advance();
    }

    Polynomial parse() {
        Polynomial p = expression();
        expect(TokKind::End, "end of input");
        return p;
    }

private:
    void advance() { current_ = lexer_.next(); }

    void expect(TokKind kind, const std::string& what) {
        if (current_.kind != kind)
            throw ParseError("expected " + what, current_.line, current_.column);
    }

    Polynomial expression() {
        Polynomial acc;
        bool negate = false;
        if (current_.kind == TokKind::Plus || current_.kind == TokKind::Minus) {
            negate = current_.kind == TokKind::Minus;
            advance();
        }
        Polynomial first = product();
        acc = negate ? -first : first;
        while (current_.kind == TokKind::Plus || current_.kind == TokKind::Minus) {
            bool minus = current_.kind == TokKind::Minus;
            advance();
            Polynomial next = product();
            acc = minus ? acc - next : acc + next;
        }
        return acc;
    }

    Polynomial product() {
        Polynomial acc = factor();
        while (current_.kind == TokKind::Star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        if (current_.kind == TokKind::Minus) {
            advance();
            return -factor();
        }
        if (current_.kind == TokKind::Plus) {
            advance();
            return factor();
        }
        Polynomial base = atom();
        if (current_.kind == TokKind::Caret) {
            advance();
            int exp = exponent();
            return base.pow(exp);
        }
        return base;
    }

    int exponent() {
        if (current_.kind == TokKind::Minus)
            throw ParseError("negative exponent", current_.line, current_.column);
        expect(TokKind::Number, "a nonnegative integer exponent");
        Token tok = current_;
        advance();
        if (current_.kind == TokKind::Slash)
            throw ParseError("fractional exponent", tok.line, tok.column);
        long value = std::stol(tok.text);
        return static_cast<int>(value);
    }

    Polynomial atom() {
        switch (current_.kind) {
            case TokKind::Number: {
                Token tok = current_;
                advance();
                Rational value = rational_from_string(tok.text);
                // A slash right after an integer is a rational literal.
                if (current_.kind == TokKind::Slash) {
                    advance();
                    expect(TokKind::Number, "a denominator");
                    Rational den = rational_from_string(current_.text);
                    advance();
                    if (den == 0)
                        throw ParseError("zero denominator in rational literal", tok.line,
                                         tok.column);
                    value /= den;
                }
                return Polynomial::constant(ParamRat{value});
            }
            case TokKind::Ident: {
                Token tok = current_;
                advance();
                auto id = table_.lookup(tok.text);
                if (!id)
                    throw ParseError("unknown identifier '" + tok.text + "'", tok.line,
                                     tok.column);
                const SymbolInfo& info = table_.info(*id);
                if (info.role == SymbolRole::State || info.role == SymbolRole::Input)
                    return Polynomial::variable(info.position);
                return Polynomial::constant(ParamRat::symbol(*id));
            }
            case TokKind::LParen: {
                advance();
                Polynomial inner = expression();
                expect(TokKind::RParen, "')'");
                advance();
                return inner;
            }
            case TokKind::Slash:
                throw ParseError("'/' is only valid inside a rational literal p/q",
                                 current_.line, current_.column);
            default:
                throw ParseError("expected a number, identifier or '('", current_.line,
                                 current_.column);
        }
    }

    Lexer lexer_;
    const SymbolTable& table_;
    Token current_;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const SymbolTable& table) {
    return Parser(text, table).parse();
}

}  // namespace polycert
