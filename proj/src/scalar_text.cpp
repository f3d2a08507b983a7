#include "frieze/scalar_text.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace frieze {

namespace {

// UTF-8 encoding of U+2212 (minus sign)
constexpr std::string_view kUnicodeMinus = "\xe2\x88\x92";

struct Lexer {
    enum class Kind { number, name, plus, minus, star, slash, caret, lparen, rparen, end };
    struct Token {
        Kind kind;
        std::string text;
        std::size_t pos;
    };

    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        tok_.pos = pos_;
        if (pos_ >= src_.size()) {
            tok_.kind = Kind::end;
            tok_.text.clear();
            return;
        }
        char c = src_[pos_];
        if (src_.substr(pos_, kUnicodeMinus.size()) == kUnicodeMinus) {
            tok_ = {Kind::minus, "-", pos_};
            pos_ += kUnicodeMinus.size();
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            tok_ = {Kind::number, std::string(src_.substr(start, pos_ - start)), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            tok_ = {Kind::name, std::string(src_.substr(start, pos_ - start)), start};
            return;
        }
        Kind k;
        switch (c) {
            case '+': k = Kind::plus; break;
            case '-': k = Kind::minus; break;
            case '*': k = Kind::star; break;
            case '/': k = Kind::slash; break;
            case '^': k = Kind::caret; break;
            case '(': k = Kind::lparen; break;
            case ')': k = Kind::rparen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        }
        tok_ = {k, std::string(1, c), pos_};
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& universe)
        : lex_(text), universe_(universe),
          kind_(universe.empty() ? ScalarKind::rational : ScalarKind::symbolic) {}

    Scalar parse() {
        Scalar v = expr();
        const auto& t = lex_.peek();
        if (t.kind != Lexer::Kind::end) throw ParseError("trailing input", t.pos);
        return v;
    }

private:
    using Kind = Lexer::Kind;

    Scalar expr() {
        bool neg = false;
        if (lex_.peek().kind == Kind::minus) {
            lex_.next();
            neg = true;
        }
        Scalar v = term();
        if (neg) v = -v;
        while (lex_.peek().kind == Kind::plus || lex_.peek().kind == Kind::minus) {
            bool minus = lex_.next().kind == Kind::minus;
            Scalar rhs = term();
            v = minus ? v - rhs : v + rhs;
        }
        return v;
    }

    Scalar term() {
        Scalar v = factor();
        while (lex_.peek().kind == Kind::star || lex_.peek().kind == Kind::slash) {
            auto op = lex_.next();
            Scalar rhs = factor();
            if (op.kind == Kind::star) {
                v = v * rhs;
            } else {
                if (rhs.is_zero()) throw ParseError("division by zero", op.pos);
                v = v / rhs;
            }
        }
        return v;
    }

    Scalar factor() {
        bool neg = false;
        if (lex_.peek().kind == Kind::minus) {
            lex_.next();
            neg = true;
        }
        Scalar v = atom();
        if (lex_.peek().kind == Kind::caret) {
            auto caret = lex_.next();
            auto e = lex_.next();
            if (e.kind != Kind::number) throw ParseError("expected a non-negative exponent", caret.pos);
            unsigned long exp = 0;
            try {
                exp = std::stoul(e.text);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", e.pos);
            }
            v = v.pow(static_cast<unsigned>(exp));
        }
        return neg ? -v : v;
    }

    Scalar atom() {
        auto t = lex_.next();
        switch (t.kind) {
            case Kind::number:
                return Scalar::constant(kind_, Rational(mpz_class(t.text)));
            case Kind::name: {
                if (kind_ == ScalarKind::rational)
                    throw ParseError("indeterminate '" + t.text + "' in rational mode", t.pos);
                if (std::find(universe_.begin(), universe_.end(), t.text) == universe_.end())
                    throw ParseError("unknown indeterminate '" + t.text + "'", t.pos);
                return Scalar(RatFunc::variable(t.text));
            }
            case Kind::lparen: {
                Scalar v = expr();
                auto close = lex_.next();
                if (close.kind != Kind::rparen) throw ParseError("expected ')'", close.pos);
                return v;
            }
            default:
                throw ParseError("expected a number, name or '('", t.pos);
        }
    }

    Lexer lex_;
    const std::vector<std::string>& universe_;
    ScalarKind kind_;
};

std::string format_term_magnitude(const Monomial& m, const Rational& abs_coeff) {
    std::string out;
    if (m.empty()) return abs_coeff.str();
    if (!abs_coeff.is_one()) out = abs_coeff.str() + "*";
    bool first = true;
    for (const auto& [name, e] : m) {
        if (!first) out += "*";
        first = false;
        out += name;
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace

Scalar parse_scalar(std::string_view text, const std::vector<std::string>& universe) {
    return Parser(text, universe).parse();
}

std::string format_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool neg = c.sign() < 0;
        std::string mag = format_term_magnitude(m, c.abs());
        if (first) {
            out += neg ? "-" + mag : mag;
            first = false;
        } else {
            out += neg ? " - " + mag : " + " + mag;
        }
    }
    return out;
}

std::string format_scalar(const Scalar& s) {
    if (s.kind() == ScalarKind::rational) return s.as_rational().str();
    const RatFunc& f = s.as_ratfunc();
    if (f.is_polynomial()) return format_poly(f.num());
    return "(" + format_poly(f.num()) + ")/(" + format_poly(f.den()) + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << format_scalar(s); }

} // namespace frieze
