#include "condsym/parser.hpp"

#include <cctype>
#include <cstdlib>

namespace condsym {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' (" + what + ")", pos);
    }
};

struct Parser {
    Lexer lex;
    explicit Parser(const std::string& text) : lex(text) {}

    Expr parse_expr() {
        bool neg = lex.eat('-');
        Expr acc = parse_term();
        if (neg) acc = ex::neg(acc);
        for (;;) {
            char c = lex.peek();
            if (c == '+') { ++lex.pos; acc = ex::add(acc, parse_term()); }
            else if (c == '-') { ++lex.pos; acc = ex::sub(acc, parse_term()); }
            else break;
        }
        return acc;
    }

    Expr parse_term() {
        Expr acc = parse_factor();
        for (;;) {
            char c = lex.peek();
            if (c == '*') { ++lex.pos; acc = ex::mul(acc, parse_factor()); }
            else if (c == '/') { ++lex.pos; acc = ex::div(acc, parse_factor()); }
            else break;
        }
        return acc;
    }

    Expr parse_factor() {
        Expr base = parse_base();
        if (lex.peek() == '^') {
            ++lex.pos;
            Expr e = parse_base();
            return ex::pow(base, e);
        }
        return base;
    }

    Expr parse_base() {
        char c = lex.peek();
        std::size_t start = lex.pos;
        if (c == '(') {
            ++lex.pos;
            Expr e = parse_expr();
            lex.expect(')', "closing parenthesis");
            return e;
        }
        if (c == '-') {
            // signed rational in base position, e.g. x^-2
            ++lex.pos;
            if (!std::isdigit(static_cast<unsigned char>(lex.peek())))
                throw ParseError("expected digits after '-'", lex.pos);
            Rational r = parse_rational();
            return ex::rat(-r);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return ex::rat(parse_rational());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (c == 'D' && lex.pos + 1 < lex.s.size() && lex.s[lex.pos + 1] == '[')
                return parse_deriv_marker();
            std::string id = parse_ident();
            if (id == "ln" || id == "sqrt" || id == "abs" || id == "exp") {
                lex.expect('(', "builtin argument");
                Expr a = parse_expr();
                lex.expect(')', "builtin argument");
                if (id == "ln") return ex::ln(a);
                if (id == "sqrt") return ex::sqrt(a);
                if (id == "abs") return ex::abs(a);
                return ex::exp(a);
            }
            int s = SymTab::instance().lookup(id);
            if (s < 0) throw ParseError("unknown identifier '" + id + "'", start);
            Sym ss = static_cast<Sym>(s);
            if (SymTab::instance().kind(ss) == SymKind::Function) {
                std::vector<Expr> args;
                if (lex.peek() == '(') {
                    ++lex.pos;
                    args.push_back(parse_expr());
                    while (lex.eat(',')) args.push_back(parse_expr());
                    lex.expect(')', "argument list");
                }
                return ex::app(ss, {}, std::move(args));
            }
            return ex::symbol(ss);
        }
        if (c == '\0') throw ParseError("unexpected end of input", lex.pos);
        throw ParseError(std::string("unexpected character '") + c + "'", lex.pos);
    }

    Expr parse_deriv_marker() {
        std::size_t start = lex.pos;
        ++lex.pos; // D
        lex.expect('[', "derivative marker");
        std::string id = parse_ident();
        int s = SymTab::instance().lookup(id);
        if (s < 0 || SymTab::instance().kind(static_cast<Sym>(s)) != SymKind::Function)
            throw ParseError("'" + id + "' is not a function symbol", start);
        std::vector<std::uint8_t> idx;
        while (lex.eat(',')) {
            if (!std::isdigit(static_cast<unsigned char>(lex.peek())))
                throw ParseError("expected derivative index", lex.pos);
            long v = 0;
            while (lex.pos < lex.s.size() && std::isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
                v = v * 10 + (lex.s[lex.pos++] - '0');
            if (v > 9) throw ParseError("derivative index out of range", lex.pos);
            idx.push_back(static_cast<std::uint8_t>(v));
        }
        if (idx.empty()) throw ParseError("derivative marker needs at least one index", lex.pos);
        lex.expect(']', "derivative marker");
        std::vector<Expr> args;
        if (lex.peek() == '(') {
            ++lex.pos;
            args.push_back(parse_expr());
            while (lex.eat(',')) args.push_back(parse_expr());
            lex.expect(')', "argument list");
        }
        return ex::app(static_cast<Sym>(s), std::move(idx), std::move(args));
    }

    std::string parse_ident() {
        lex.skip_ws();
        std::size_t start = lex.pos;
        while (lex.pos < lex.s.size() &&
               (std::isalnum(static_cast<unsigned char>(lex.s[lex.pos])) || lex.s[lex.pos] == '_'))
            ++lex.pos;
        if (lex.pos == start) throw ParseError("expected identifier", start);
        return lex.s.substr(start, lex.pos - start);
    }

    Rational parse_rational() {
        lex.skip_ws();
        long long num = 0;
        std::size_t start = lex.pos;
        while (lex.pos < lex.s.size() && std::isdigit(static_cast<unsigned char>(lex.s[lex.pos]))) {
            num = num * 10 + (lex.s[lex.pos] - '0');
            if (num < 0) throw ParseError("integer literal too large", start);
            ++lex.pos;
        }
        // int '/' int is a rational literal only when the '/' is directly
        // followed by digits; otherwise it is the division operator.
        if (lex.pos < lex.s.size() && lex.s[lex.pos] == '/' && lex.pos + 1 < lex.s.size() &&
            std::isdigit(static_cast<unsigned char>(lex.s[lex.pos + 1]))) {
            ++lex.pos;
            long long den = 0;
            while (lex.pos < lex.s.size() && std::isdigit(static_cast<unsigned char>(lex.s[lex.pos]))) {
                den = den * 10 + (lex.s[lex.pos] - '0');
                if (den < 0) throw ParseError("integer literal too large", start);
                ++lex.pos;
            }
            return Rational(num, den);
        }
        return Rational(num);
    }
};

} // namespace

Expr parse(const std::string& text) {
    Parser p(text);
    Expr e = p.parse_expr();
    p.lex.skip_ws();
    if (p.lex.pos != text.size()) throw ParseError("trailing input", p.lex.pos);
    return e;
}

} // namespace condsym
