#include "defq/parse.hpp"

#include <cctype>

namespace defq {

namespace {

enum class Tok { num, var, dsym, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    Rat num;
    unsigned index = 0;   // var/dsym direction, 0-based
    unsigned line = 1, col = 1;
};

class Lexer {
public:
    Lexer(const std::string& src, std::size_t dim) : src_(src), dim_(dim) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(tok_.line, tok_.col, msg); }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Tok::end;
            return;
        }
        const char c = src_[pos_];
        switch (c) {
            case '+': bump(); tok_.kind = Tok::plus; return;
            case '-': bump(); tok_.kind = Tok::minus; return;
            case '*': bump(); tok_.kind = Tok::star; return;
            case '^': bump(); tok_.kind = Tok::caret; return;
            case '(': bump(); tok_.kind = Tok::lparen; return;
            case ')': bump(); tok_.kind = Tok::rparen; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = lex_digits();
            if (pos_ < src_.size() && src_[pos_] == '/') {
                bump();
                if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    throw ParseError(line_, col_, "expected denominator digits after '/'");
                std::string den = lex_digits();
                tok_.kind = Tok::num;
                tok_.num = rat_from_string(digits + "/" + den);
            } else {
                tok_.kind = Tok::num;
                tok_.num = rat_from_string(digits);
            }
            return;
        }
        if (c == 'x' || c == 'd') {
            const unsigned l = line_, co = col_;
            bump();
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw ParseError(l, co, std::string("expected index after '") + c + "'");
            std::string digits = lex_digits();
            unsigned idx = static_cast<unsigned>(std::stoul(digits));
            if (idx < 1 || idx > dim_)
                throw ParseError(l, co, std::string(1, c) + digits + " out of range for dimension " +
                                            std::to_string(dim_));
            tok_.kind = (c == 'x') ? Tok::var : Tok::dsym;
            tok_.index = idx - 1;
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    std::string lex_digits() {
        std::string s;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            s += src_[pos_];
            bump();
        }
        return s;
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    std::size_t dim_;
    std::size_t pos_ = 0;
    unsigned line_ = 1, col_ = 1;
    Token tok_;
};

// intermediate value: uniform-arity polyvector (arity 0 = scalar poly)
struct Val {
    PolyVec v;
};

class Parser {
public:
    Parser(const std::string& src, std::size_t dim, std::vector<std::string>& warnings)
        : lex_(src, dim), dim_(dim), warnings_(warnings) {}

    Val parse() {
        Val v = expr();
        if (lex_.peek().kind != Tok::end) lex_.fail("trailing input");
        return v;
    }

private:
    Val expr() {
        bool neg = false;
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            neg = true;
        } else if (lex_.peek().kind == Tok::plus) {
            lex_.take();
        }
        Val acc = term();
        if (neg) acc.v = -acc.v;
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            bool minus = lex_.take().kind == Tok::minus;
            Val t = term();
            if (minus) t.v = -t.v;
            acc.v = add_checked(acc.v, t.v);
        }
        return acc;
    }

    PolyVec add_checked(const PolyVec& a, const PolyVec& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.arity() != b.arity()) lex_.fail("cannot add terms of different wedge arity");
        return a + b;
    }

    Val term() {
        Val acc = factor();
        while (lex_.peek().kind == Tok::star) {
            lex_.take();
            Val f = factor();
            acc.v = mul_vals(acc.v, f.v);
        }
        return acc;
    }

    PolyVec mul_vals(const PolyVec& a, const PolyVec& b) {
        if (a.arity() == 0 && b.arity() == 0) {
            Poly pa = a.is_zero() ? Poly(dim_) : a.components().begin()->second;
            Poly pb = b.is_zero() ? Poly(dim_) : b.components().begin()->second;
            return PolyVec::function(dim_, pa * pb);
        }
        return wedge(a, b);
    }

    Val factor() {
        Val acc = atom();
        while (lex_.peek().kind == Tok::caret) {
            Token caret = lex_.take();
            if (acc.v.arity() >= 1 || is_zero_wedge_) {
                // wedge join: right side must be a basis symbol
                if (lex_.peek().kind != Tok::dsym)
                    throw ParseError(caret.line, caret.col, "expected basis symbol after '^'");
                Token t = lex_.take();
                PolyVec rhs =
                    PolyVec::term(dim_, {static_cast<int>(t.index)}, Poly::constant(dim_, Rat(1)));
                PolyVec joined = wedge(acc.v, rhs);
                if (joined.is_zero() && !acc.v.is_zero())
                    warnings_.push_back("repeated basis symbol yields zero (d" +
                                        std::to_string(t.index + 1) + " twice)");
                if (joined.is_zero()) is_zero_wedge_ = true;
                acc.v = joined;
            } else {
                if (lex_.peek().kind != Tok::num)
                    throw ParseError(caret.line, caret.col, "expected integer exponent after '^'");
                Token e = lex_.take();
                if (denominator(e.num) != 1 || e.num < 0)
                    throw ParseError(e.line, e.col, "exponent must be a nonnegative integer");
                unsigned long n = numerator(e.num).convert_to<unsigned long>();
                Poly base = acc.v.is_zero() ? Poly(dim_) : acc.v.components().begin()->second;
                Poly r = Poly::constant(dim_, Rat(1));
                for (unsigned long i = 0; i < n; ++i) r = r * base;
                acc.v = PolyVec::function(dim_, r);
            }
        }
        return acc;
    }

    Val atom() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::num:
                lex_.take();
                return {PolyVec::function(dim_, Poly::constant(dim_, t.num))};
            case Tok::var:
                lex_.take();
                return {PolyVec::function(dim_, Poly::variable(dim_, t.index))};
            case Tok::dsym:
                lex_.take();
                return {PolyVec::term(dim_, {static_cast<int>(t.index)},
                                      Poly::constant(dim_, Rat(1)))};
            case Tok::lparen: {
                lex_.take();
                Val v = expr();
                if (lex_.peek().kind != Tok::rparen) lex_.fail("expected ')'");
                lex_.take();
                return v;
            }
            case Tok::minus: {
                lex_.take();
                Val v = atom();
                v.v = -v.v;
                return v;
            }
            default:
                lex_.fail("expected a value");
        }
    }

    Lexer lex_;
    std::size_t dim_;
    std::vector<std::string>& warnings_;
    bool is_zero_wedge_ = false;
};

} // namespace

ParseResult parse_expression(const std::string& src, ExprKind kind, std::size_t dim) {
    ParseResult res;
    Parser p(src, dim, res.warnings);
    Val v = p.parse();
    res.value = v.v;
    const unsigned want = kind == ExprKind::poly ? 0 : kind == ExprKind::vector ? 1 : 2;
    if (!res.value.is_zero() && res.value.arity() != want)
        throw ParseError(1, 1, "expression has wedge arity " + std::to_string(res.value.arity()) +
                                   ", expected " + std::to_string(want));
    if (res.value.is_zero()) res.value = PolyVec(dim, want);
    return res;
}

Poly parse_poly(const std::string& src, std::size_t dim) {
    auto r = parse_expression(src, ExprKind::poly, dim);
    if (r.value.is_zero()) return Poly(dim);
    return r.value.components().begin()->second;
}

} // namespace defq
