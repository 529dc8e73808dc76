#include "divsum/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <string>
#include <vector>

namespace divsum {

namespace {

enum class Tok {
    Integer,
    Decimal,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Equals,
    DotDot,
    End
};

struct Token {
    Tok kind = Tok::End;
    std::size_t pos = 0;
    std::string text;
    Rational int_value;
    double dec_value = 0.0;
};

class Lexer {
   public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

   private:
    void advance() {
        while (i_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[i_])))
            ++i_;
        tok_ = Token{};
        tok_.pos = i_;
        if (i_ >= src_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) ||
                    src_[i_] == '_'))
                ++i_;
            tok_.kind = Tok::Ident;
            tok_.text = src_.substr(start, i_ - start);
            return;
        }
        switch (c) {
            case '+': tok_.kind = Tok::Plus; break;
            case '-': tok_.kind = Tok::Minus; break;
            case '*': tok_.kind = Tok::Star; break;
            case '/': tok_.kind = Tok::Slash; break;
            case '^': tok_.kind = Tok::Caret; break;
            case '(': tok_.kind = Tok::LParen; break;
            case ')': tok_.kind = Tok::RParen; break;
            case ',': tok_.kind = Tok::Comma; break;
            case '=': tok_.kind = Tok::Equals; break;
            case '.':
                if (i_ + 1 < src_.size() && src_[i_ + 1] == '.') {
                    tok_.kind = Tok::DotDot;
                    ++i_;
                    break;
                }
                throw SyntaxError("unexpected '.'", i_);
            default:
                throw SyntaxError(std::string("unexpected character '") + c +
                                      "'",
                                  i_);
        }
        ++i_;
    }

    void lex_number() {
        std::size_t start = i_;
        while (i_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[i_])))
            ++i_;
        bool is_decimal = false;
        // A '.' begins a fractional part only when it is not the range
        // operator ".." and is followed by a digit.
        if (i_ < src_.size() && src_[i_] == '.' &&
            !(i_ + 1 < src_.size() && src_[i_ + 1] == '.')) {
            if (!(i_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[i_ + 1]))))
                throw SyntaxError("expected digits after decimal point",
                                  i_ + 1);
            is_decimal = true;
            ++i_;
            while (i_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[i_])))
                ++i_;
        }
        // Scientific notation: e or E followed by an optionally signed
        // integer.  "2e" followed by anything else stays an identifier
        // boundary error later, so require at least one digit.
        if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
            std::size_t j = i_ + 1;
            if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
            if (j < src_.size() &&
                std::isdigit(static_cast<unsigned char>(src_[j]))) {
                is_decimal = true;
                i_ = j;
                while (i_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[i_])))
                    ++i_;
            }
        }
        tok_.text = src_.substr(start, i_ - start);
        if (is_decimal) {
            tok_.kind = Tok::Decimal;
            tok_.dec_value = std::strtod(tok_.text.c_str(), nullptr);
        } else {
            tok_.kind = Tok::Integer;
            tok_.int_value = Rational(BigInt(tok_.text), BigInt(1));
        }
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
   public:
    explicit Parser(const std::string& src) : lex_(src) {}

    Lexer& lexer() { return lex_; }

    AstPtr expression(int rbp) {
        Token t = lex_.next();
        AstPtr left = nud(t);
        while (binding_power(lex_.peek().kind) > rbp) {
            Token op = lex_.next();
            left = led(op, std::move(left));
        }
        return left;
    }

    Token expect(Tok kind, const char* what) {
        Token t = lex_.next();
        if (t.kind != kind)
            throw SyntaxError(std::string("expected ") + what, t.pos);
        return t;
    }

    void expect_end() {
        const Token& t = lex_.peek();
        if (t.kind != Tok::End)
            throw SyntaxError("unexpected trailing input", t.pos);
    }

   private:
    static int binding_power(Tok k) {
        switch (k) {
            case Tok::Plus:
            case Tok::Minus:
                return 10;
            case Tok::Star:
            case Tok::Slash:
                return 20;
            case Tok::Caret:
                return 40;
            default:
                return 0;
        }
    }

    AstPtr nud(const Token& t) {
        switch (t.kind) {
            case Tok::Integer:
                return make_int(t.int_value, t.pos);
            case Tok::Decimal:
                return make_dec(t.dec_value, t.pos);
            case Tok::Minus:
                // Binds tighter than * but looser than ^, so -2^u parses
                // as -(2^u).
                return make_unary(AstKind::Neg, expression(29), t.pos);
            case Tok::Plus:
                return expression(29);
            case Tok::LParen: {
                AstPtr inner = expression(0);
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Ident:
                return ident_nud(t);
            default:
                throw SyntaxError("expected an expression", t.pos);
        }
    }

    AstPtr ident_nud(const Token& t) {
        if (t.text == "u" || t.text == "n") return make_var(t.text, t.pos);
        if (t.text == "pi") return make_leaf(AstKind::Pi, t.pos);
        if (t.text == "i") return make_leaf(AstKind::ImagUnit, t.pos);
        CallFn fn;
        if (t.text == "cos")
            fn = CallFn::Cos;
        else if (t.text == "sin")
            fn = CallFn::Sin;
        else if (t.text == "cosh")
            fn = CallFn::Cosh;
        else if (t.text == "sinh")
            fn = CallFn::Sinh;
        else if (t.text == "exp")
            fn = CallFn::Exp;
        else
            throw SyntaxError("unknown identifier '" + t.text + "'", t.pos);
        expect(Tok::LParen, "'(' after function name");
        AstPtr arg = expression(0);
        expect(Tok::RParen, "')'");
        return make_call(fn, std::move(arg), t.pos);
    }

    AstPtr led(const Token& op, AstPtr left) {
        switch (op.kind) {
            case Tok::Plus:
                return make_bin(AstKind::Add, std::move(left), expression(10),
                                op.pos);
            case Tok::Minus:
                return make_bin(AstKind::Sub, std::move(left), expression(10),
                                op.pos);
            case Tok::Star:
                return make_bin(AstKind::Mul, std::move(left), expression(20),
                                op.pos);
            case Tok::Slash:
                return make_bin(AstKind::Div, std::move(left), expression(20),
                                op.pos);
            case Tok::Caret:
                // Right associative: recurse at one below our own power.
                return make_bin(AstKind::Pow, std::move(left), expression(39),
                                op.pos);
            default:
                throw SyntaxError("expected an operator", op.pos);
        }
    }

    Lexer lex_;
};

long long to_int64(const Rational& r, std::size_t pos) {
    if (!r.is_integer())
        throw SyntaxError("expected an integer", pos);
    BigInt n = r.num();
    static const BigInt kMax = (BigInt(1) << 62);
    if (n > kMax || n < -kMax)
        throw SyntaxError("integer bound out of range", pos);
    return static_cast<long long>(n);
}

// Parse an optionally signed integer literal (with optional parentheses),
// e.g. "-4", "(-4)", "7".
long long signed_int(Parser& p, Lexer& lex) {
    (void)p;
    bool neg = false;
    int parens = 0;
    while (lex.peek().kind == Tok::LParen) {
        lex.next();
        ++parens;
    }
    if (lex.peek().kind == Tok::Minus) {
        lex.next();
        neg = true;
    } else if (lex.peek().kind == Tok::Plus) {
        lex.next();
    }
    Token t = lex.next();
    if (t.kind != Tok::Integer)
        throw SyntaxError("expected an integer", t.pos);
    long long v = to_int64(t.int_value, t.pos);
    for (; parens > 0; --parens) {
        Token r = lex.next();
        if (r.kind != Tok::RParen) throw SyntaxError("expected ')'", r.pos);
    }
    return neg ? -v : v;
}

}  // namespace

AstPtr parse_expression(const std::string& text) {
    Parser p(text);
    AstPtr e = p.expression(0);
    p.expect_end();
    return e;
}

Query parse_query(const std::string& text) {
    Query q;
    q.input = text;
    Parser p(text);
    Lexer& lex = p.lexer();

    Token head = lex.next();
    if (head.kind != Tok::Ident)
        throw SyntaxError(
            "expected a query keyword (sum, limit, zeta, eta, factorial, "
            "verify)",
            head.pos);

    if (head.text == "sum" || head.text == "verify") {
        q.kind = head.text == "sum" ? Query::Kind::Sum : Query::Kind::Verify;
        q.term = p.expression(0);
        p.expect(Tok::Comma, "',' before the range");
        Token var = p.expect(Tok::Ident, "the summation variable");
        if (var.text != "u" && var.text != "n")
            throw SyntaxError("the summation variable must be u or n",
                              var.pos);
        q.var = var.text;
        p.expect(Tok::Equals, "'='");
        q.a = signed_int(p, lex);
        p.expect(Tok::DotDot, "'..'");
        if (lex.peek().kind == Tok::Ident && lex.peek().text == "inf") {
            lex.next();
            q.b = std::nullopt;
        } else {
            q.b = signed_int(p, lex);
        }
        p.expect_end();
        return q;
    }

    if (head.text == "limit") {
        q.kind = Query::Kind::Limit;
        q.term = p.expression(0);
        p.expect_end();
        return q;
    }

    if (head.text == "zeta" || head.text == "eta" ||
        head.text == "factorial") {
        q.kind = head.text == "zeta"  ? Query::Kind::Zeta
                 : head.text == "eta" ? Query::Kind::Eta
                                      : Query::Kind::Factorial;
        q.arg = signed_int(p, lex);
        p.expect_end();
        return q;
    }

    throw SyntaxError("unknown query keyword '" + head.text + "'", head.pos);
}

}  // namespace divsum
