#include "condsym/expr.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace condsym {

namespace {

std::size_t hash_combine(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t node_hash(const Node& n) {
    std::size_t h = static_cast<std::size_t>(n.kind) * 1099511628211ULL;
    h = hash_combine(h, static_cast<std::size_t>(n.rat.num()));
    h = hash_combine(h, static_cast<std::size_t>(n.rat.den()));
    h = hash_combine(h, n.symbol);
    for (auto d : n.derivs) h = hash_combine(h, d);
    for (const auto& k : n.kids) h = hash_combine(h, k.hash());
    return h;
}

Expr make(Node n) {
    n.hash = node_hash(n);
    return Expr(std::make_shared<const Node>(std::move(n)));
}

} // namespace

int cmp(const Expr& a, const Expr& b) {
    if (&a.node() == &b.node()) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
        case Kind::Rat:
            if (a.rat() == b.rat()) return 0;
            return a.rat() < b.rat() ? -1 : 1;
        case Kind::Symbol:
            if (a.symbol() != b.symbol()) return a.symbol() < b.symbol() ? -1 : 1;
            return 0;
        case Kind::App: {
            if (a.symbol() != b.symbol()) return a.symbol() < b.symbol() ? -1 : 1;
            const auto& da = a.derivs();
            const auto& db = b.derivs();
            if (da.size() != db.size()) return da.size() < db.size() ? -1 : 1;
            for (std::size_t i = 0; i < da.size(); ++i)
                if (da[i] != db[i]) return da[i] < db[i] ? -1 : 1;
            break;
        }
        case Kind::Integral:
            if (!(a.rat() == b.rat())) return a.rat() < b.rat() ? -1 : 1;
            break;
        default:
            break;
    }
    const auto& ka = a.kids();
    const auto& kb = b.kids();
    if (ka.size() != kb.size()) return ka.size() < kb.size() ? -1 : 1;
    for (std::size_t i = 0; i < ka.size(); ++i) {
        int c = cmp(ka[i], kb[i]);
        if (c != 0) return c;
    }
    return 0;
}

namespace ex {

Expr rat(const Rational& r) {
    Node n;
    n.kind = Kind::Rat;
    n.rat = r;
    return make(std::move(n));
}
Expr rat(long long num, long long den) { return rat(Rational(num, den)); }

Expr symbol(Sym s) {
    Node n;
    n.kind = Kind::Symbol;
    n.symbol = s;
    return make(std::move(n));
}

Expr sum(std::vector<Expr> terms) {
    std::vector<Expr> flat;
    Rational c(0);
    for (auto& t : terms) {
        if (!t.valid()) throw std::invalid_argument("invalid Expr in sum");
        if (t.kind() == Kind::Sum) {
            for (const auto& k : t.kids()) {
                if (k.is_rat()) c += k.rat();
                else flat.push_back(k);
            }
        } else if (t.is_rat()) {
            c += t.rat();
        } else {
            flat.push_back(std::move(t));
        }
    }
    if (!c.is_zero()) flat.push_back(rat(c));
    if (flat.empty()) return rat(0);
    if (flat.size() == 1) return flat[0];
    Node n;
    n.kind = Kind::Sum;
    n.kids = std::move(flat);
    return make(std::move(n));
}

Expr prod(std::vector<Expr> factors) {
    std::vector<Expr> flat;
    Rational c(1);
    for (auto& f : factors) {
        if (!f.valid()) throw std::invalid_argument("invalid Expr in prod");
        if (f.kind() == Kind::Prod) {
            for (const auto& k : f.kids()) {
                if (k.is_rat()) c *= k.rat();
                else flat.push_back(k);
            }
        } else if (f.is_rat()) {
            c *= f.rat();
        } else {
            flat.push_back(std::move(f));
        }
    }
    if (c.is_zero()) return rat(0);
    if (!c.is_one()) flat.insert(flat.begin(), rat(c));
    if (flat.empty()) return rat(1);
    if (flat.size() == 1) return flat[0];
    Node n;
    n.kind = Kind::Prod;
    n.kids = std::move(flat);
    return make(std::move(n));
}

Expr pow(Expr base, Expr exponent) {
    if (exponent.is_zero()) return rat(1);
    if (exponent.is_one()) return base;
    if (base.is_rat() && exponent.is_rat() && exponent.rat().is_integer())
        return rat(base.rat().pow_int(exponent.rat().num()));
    Node n;
    n.kind = Kind::Pow;
    n.kids = {std::move(base), std::move(exponent)};
    return make(std::move(n));
}

Expr ln(Expr a) {
    Node n;
    n.kind = Kind::Ln;
    n.kids = {std::move(a)};
    return make(std::move(n));
}
Expr sqrt(Expr a) {
    Node n;
    n.kind = Kind::Sqrt;
    n.kids = {std::move(a)};
    return make(std::move(n));
}
Expr abs(Expr a) {
    Node n;
    n.kind = Kind::Abs;
    n.kids = {std::move(a)};
    return make(std::move(n));
}
Expr exp(Expr a) {
    Node n;
    n.kind = Kind::Exp;
    n.kids = {std::move(a)};
    return make(std::move(n));
}

Expr app(Sym name, std::vector<std::uint8_t> derivs, std::vector<Expr> args) {
    std::sort(derivs.begin(), derivs.end());
    Node n;
    n.kind = Kind::App;
    n.symbol = name;
    n.derivs = std::move(derivs);
    n.kids = std::move(args);
    return make(std::move(n));
}

Expr integral(Expr integrand, const Rational& basepoint) {
    return integral(std::move(integrand), symbol(sym::radial()), basepoint);
}

Expr integral(Expr integrand, Expr upper, const Rational& basepoint) {
    Node n;
    n.kind = Kind::Integral;
    n.rat = basepoint;
    n.kids = {std::move(integrand), std::move(upper)};
    return make(std::move(n));
}

Expr add(Expr a, Expr b) { return sum({std::move(a), std::move(b)}); }
Expr sub(Expr a, Expr b) { return sum({std::move(a), neg(std::move(b))}); }
Expr mul(Expr a, Expr b) { return prod({std::move(a), std::move(b)}); }
Expr div(Expr a, Expr b) { return prod({std::move(a), pow(std::move(b), rat(-1))}); }
Expr neg(Expr a) { return prod({rat(-1), std::move(a)}); }

Expr x(int i) { return symbol(sym::coord(i)); }
Expr w(int a) { return symbol(sym::invariant(a)); }
Expr wrad() { return symbol(sym::radial()); }
Expr u() { return app(sym::u(), {}, {}); }
Expr ujet(std::vector<std::uint8_t> idx) { return app(sym::u(), std::move(idx), {}); }
Expr fapp(Sym name) { return app(name, {}, {}); }
Expr fjet(Sym name, std::vector<std::uint8_t> idx) { return app(name, std::move(idx), {}); }

} // namespace ex

namespace {

// Precedence levels for the printer: sum < product < power < atom.
enum Prec { P_SUM = 0, P_PROD = 1, P_POW = 2, P_ATOM = 3 };

void fmt(const Expr& e, std::ostream& os, int parent_prec);

void fmt_paren(const Expr& e, std::ostream& os, int prec, int parent_prec) {
    if (prec < parent_prec) {
        os << '(';
        fmt(e, os, P_SUM);
        os << ')';
    } else {
        fmt(e, os, parent_prec);
    }
}

bool is_negative_head(const Expr& e) {
    if (e.is_rat()) return e.rat().is_negative();
    if (e.kind() == Kind::Prod && e.kids().front().is_rat())
        return e.kids().front().rat().is_negative();
    return false;
}

// Render e with its leading sign stripped (only for rationals / products
// with a rational head).
Expr strip_sign(const Expr& e) {
    if (e.is_rat()) return ex::rat(-e.rat());
    if (e.kind() == Kind::Prod && e.kids().front().is_rat()) {
        std::vector<Expr> ks = e.kids();
        ks[0] = ex::rat(-ks[0].rat());
        return ex::prod(std::move(ks));
    }
    return e;
}

void fmt(const Expr& e, std::ostream& os, int parent_prec) {
    switch (e.kind()) {
        case Kind::Rat: {
            const auto& r = e.rat();
            bool need_paren = (!r.is_integer() || r.is_negative()) && parent_prec >= P_POW;
            if (need_paren) os << '(';
            os << r.str();
            if (need_paren) os << ')';
            break;
        }
        case Kind::Symbol:
            os << SymTab::instance().name(e.symbol());
            break;
        case Kind::Sum: {
            if (parent_prec > P_SUM) os << '(';
            bool first = true;
            for (const auto& t : e.kids()) {
                if (!first && is_negative_head(t)) {
                    os << " - ";
                    fmt(strip_sign(t), os, P_SUM + 1);
                } else {
                    if (!first) os << " + ";
                    fmt(t, os, P_SUM + 1);
                }
                first = false;
            }
            if (parent_prec > P_SUM) os << ')';
            break;
        }
        case Kind::Prod: {
            if (parent_prec > P_PROD) os << '(';
            bool first = true;
            for (const auto& f : e.kids()) {
                if (!first) os << '*';
                fmt_paren(f, os, f.kind() == Kind::Sum ? P_SUM : (f.kind() == Kind::Prod ? P_PROD : P_ATOM),
                          P_PROD + (first ? 0 : 1));
                first = false;
            }
            if (parent_prec > P_PROD) os << ')';
            break;
        }
        case Kind::Pow: {
            const Expr& b = e.kids()[0];
            const Expr& ex_ = e.kids()[1];
            bool b_atom = b.kind() != Kind::Sum && b.kind() != Kind::Prod && b.kind() != Kind::Pow &&
                          !(b.is_rat() && (!b.rat().is_integer() || b.rat().is_negative()));
            if (b_atom) fmt(b, os, P_ATOM);
            else { os << '('; fmt(b, os, P_SUM); os << ')'; }
            os << '^';
            bool e_atom = ex_.kind() == Kind::Symbol ||
                          (ex_.is_rat() && ex_.rat().is_integer() && !ex_.rat().is_negative());
            if (e_atom) fmt(ex_, os, P_ATOM);
            else { os << '('; fmt(ex_, os, P_SUM); os << ')'; }
            break;
        }
        case Kind::Ln:
            os << "ln(";
            fmt(e.kids()[0], os, P_SUM);
            os << ')';
            break;
        case Kind::Sqrt:
            os << "sqrt(";
            fmt(e.kids()[0], os, P_SUM);
            os << ')';
            break;
        case Kind::Abs:
            os << "abs(";
            fmt(e.kids()[0], os, P_SUM);
            os << ')';
            break;
        case Kind::Exp:
            os << "exp(";
            fmt(e.kids()[0], os, P_SUM);
            os << ')';
            break;
        case Kind::App: {
            const auto& name = SymTab::instance().name(e.symbol());
            if (e.derivs().empty()) {
                os << name;
            } else {
                os << "D[" << name;
                for (auto d : e.derivs()) os << ',' << int(d);
                os << ']';
            }
            if (!e.kids().empty()) {
                os << '(';
                bool first = true;
                for (const auto& a : e.kids()) {
                    if (!first) os << ',';
                    fmt(a, os, P_SUM);
                    first = false;
                }
                os << ')';
            }
            break;
        }
        case Kind::Integral:
            os << "integral[" << e.rat().str() << "](";
            fmt(e.kids()[0], os, P_SUM);
            os << "; ";
            fmt(e.kids()[1], os, P_SUM);
            os << ')';
            break;
    }
}

} // namespace

std::string format(const Expr& e) {
    std::ostringstream os;
    fmt(e, os, P_SUM);
    return os.str();
}

void collect_symbols(const Expr& e, std::vector<Sym>& out) {
    switch (e.kind()) {
        case Kind::Symbol:
        case Kind::App:
            out.push_back(e.symbol());
            break;
        default:
            break;
    }
    for (const auto& k : e.kids()) collect_symbols(k, out);
}

bool mentions_symbol(const Expr& e, Sym s) {
    if ((e.kind() == Kind::Symbol || e.kind() == Kind::App) && e.symbol() == s) return true;
    for (const auto& k : e.kids())
        if (mentions_symbol(k, s)) return true;
    return false;
}

bool contains_subexpr(const Expr& e, const Expr& sub) {
    if (struct_eq(e, sub)) return true;
    for (const auto& k : e.kids())
        if (contains_subexpr(k, sub)) return true;
    return false;
}

int jet_order(const Expr& e, Sym name) {
    int best = 0;
    if (e.kind() == Kind::App && e.symbol() == name)
        best = static_cast<int>(e.derivs().size());
    for (const auto& k : e.kids()) best = std::max(best, jet_order(k, name));
    return best;
}

} // namespace condsym
