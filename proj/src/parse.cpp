#include "keller/parse.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace keller {

namespace {

std::string located(const std::string& message, int line, int column) {
    std::ostringstream os;
    os << message << " at line " << line << ", column " << column;
    return os.str();
}

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    Lexer(const std::string& src, int line_offset) : src_(src), line_(line_offset) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        current_ = Token{Tok::End, "", line_, col_};
        if (pos_ >= src_.size()) return;
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                ++col_;
            }
            current_.kind = Tok::Number;
            current_.text = src_.substr(start, pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
                ++col_;
            }
            current_.kind = Tok::Ident;
            current_.text = src_.substr(start, pos_ - start);
            return;
        }
        switch (c) {
            case '+': current_.kind = Tok::Plus; break;
            case '-': current_.kind = Tok::Minus; break;
            case '*': current_.kind = Tok::Star; break;
            case '^': current_.kind = Tok::Caret; break;
            case '/': current_.kind = Tok::Slash; break;
            case '(': current_.kind = Tok::LParen; break;
            case ')': current_.kind = Tok::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        current_.text = std::string(1, c);
        ++pos_;
        ++col_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_;
    int col_ = 1;
    Token current_;
};

class PolyParser {
public:
    PolyParser(const std::string& text, std::span<const std::string> vars, int line_offset)
        : lex_(text, line_offset), vars_(vars) {}

    Polynomial parse() {
        Polynomial p = expression();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End)
            throw ParseError("unexpected '" + t.text + "'", t.line, t.col);
        return p;
    }

private:
    std::size_t nvars() const { return vars_.size(); }

    Polynomial expression() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus)
            negate = lex_.take().kind == Tok::Minus;
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            const bool sub = lex_.take().kind == Tok::Minus;
            Polynomial t = term();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Number: return rational_literal();
            case Tok::Ident: {
                lex_.take();
                std::size_t var = nvars();
                for (std::size_t j = 0; j < nvars(); ++j)
                    if (vars_[j] == t.text) {
                        var = j;
                        break;
                    }
                if (var == nvars())
                    throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
                return maybe_power(Polynomial::variable(nvars(), var));
            }
            case Tok::LParen: {
                lex_.take();
                Polynomial inner = expression();
                const Token& close = lex_.peek();
                if (close.kind != Tok::RParen)
                    throw ParseError("expected ')'", close.line, close.col);
                lex_.take();
                return maybe_power(std::move(inner));
            }
            default:
                throw ParseError("unexpected '" + (t.kind == Tok::End ? std::string("end of input") : t.text) + "'",
                                 t.line, t.col);
        }
    }

    Polynomial maybe_power(Polynomial base) {
        if (lex_.peek().kind != Tok::Caret) return base;
        lex_.take();
        const Token e = lex_.peek();
        if (e.kind != Tok::Number)
            throw ParseError("exponent must be a nonnegative integer", e.line, e.col);
        lex_.take();
        unsigned long long value;
        try {
            value = std::stoull(e.text);
        } catch (const std::out_of_range&) {
            throw ParseError("exponent too large", e.line, e.col);
        }
        if (value > 100000) throw ParseError("exponent too large", e.line, e.col);
        return pow(base, static_cast<std::uint32_t>(value));
    }

    Polynomial rational_literal() {
        const Token num = lex_.take();
        std::string text = num.text;
        if (lex_.peek().kind == Tok::Slash) {
            lex_.take();
            const Token den = lex_.peek();
            if (den.kind != Tok::Number)
                throw ParseError("expected integer denominator", den.line, den.col);
            lex_.take();
            text += "/" + den.text;
        }
        Rational value;
        try {
            value = Rational::from_string(text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), num.line, num.col);
        }
        return Polynomial::constant(nvars(), std::move(value));
    }

    Lexer lex_;
    std::span<const std::string> vars_;
};

}  // namespace

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error(located(message, line, column)), line_(line), column_(column) {}

Polynomial parse_poly(const std::string& text, std::span<const std::string> vars, int line_offset) {
    return PolyParser(text, vars, line_offset).parse();
}

bool is_valid_identifier(const std::string& name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace keller
