#include "condsym/normal.hpp"

#include <algorithm>
#include <cstdlib>

namespace condsym {

namespace {

int cmp_expo(const ExpoKey& a, const ExpoKey& b) {
    if (!(a.r == b.r)) return a.r < b.r ? -1 : 1;
    if (a.s == b.s) return 0;
    return a.s < b.s ? -1 : 1;
}

// Graded order: total rational degree first, then lexicographic. The grading
// keeps exact division well-behaved on Laurent monomials (negative powers of
// x0 and friends are everywhere in the reduction pipeline).
int cmp_mono(const Mono& a, const Mono& b) {
    Rational da(0), db(0);
    for (const auto& f : a) da += f.exp.r;
    for (const auto& f : b) db += f.exp.r;
    if (!(da == db)) return da < db ? -1 : 1;
    std::size_t i = 0;
    for (; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i].base, b[i].base);
        if (c != 0) return c;
        c = cmp_expo(a[i].exp, b[i].exp);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

} // namespace

bool MonoLess::operator()(const Mono& a, const Mono& b) const { return cmp_mono(a, b) < 0; }

void Poly::add_term(const Mono& m, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto it = t.find(m);
    if (it == t.end()) t[m] = c;
    else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

Rational Poly::content_signed() const {
    Rational g(0);
    for (const auto& [m, c] : t) g = Rational::gcd(g, c.content());
    if (g.is_zero()) return g;
    if (!t.empty() && t.rbegin()->second.lead_sign() < 0) g = -g;
    return g;
}

bool PolyLess::operator()(const Poly& a, const Poly& b) const {
    auto ia = a.t.begin(), ib = b.t.begin();
    for (; ia != a.t.end() && ib != b.t.end(); ++ia, ++ib) {
        int c = cmp_mono(ia->first, ib->first);
        if (c != 0) return c < 0;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.t.end() && ib != b.t.end();
}

Expr ExpoKey::render() const {
    if (s.is_zero()) return ex::rat(r);
    if (r.is_zero()) return s.render();
    return ex::add(ex::rat(r), s.render());
}

// ---------------------------------------------------------------------------

namespace {

enum class BaseCat { Unit, Param, PolyB, AbsB, Opaque };

bool is_param(Sym s) { return SymTab::instance().kind(s) == SymKind::Parameter; }

BaseCat classify(const Expr& base) {
    switch (base.kind()) {
        case Kind::Symbol:
            return is_param(base.symbol()) ? BaseCat::Param : BaseCat::Unit;
        case Kind::App:
        case Kind::Ln:
        case Kind::Exp:
        case Kind::Integral:
            return BaseCat::Unit;
        case Kind::Abs:
            return BaseCat::AbsB;
        case Kind::Pow:
            return BaseCat::Opaque;
        default:
            return BaseCat::PolyB; // sums and rationals as polynomial bases
    }
}

NormalExpr nx_one() { return nx_rat(Rational(1)); }

NormalExpr nx_from_poly(Poly p) {
    NormalExpr r;
    r.num = std::move(p);
    return r;
}

// Exact rational root q with q^root_den == v, if one exists (v >= 0).
std::optional<Rational> rational_root(const Rational& v, long long root_den) {
    if (root_den == 1) return v;
    if (v.is_negative()) return std::nullopt;
    auto iroot = [&](long long x) -> std::optional<long long> {
        if (x == 0 || x == 1) return x;
        long long lo = 1, hi = x;
        while (lo <= hi) {
            long long mid = lo + (hi - lo) / 2;
            __int128 p = 1;
            bool over = false;
            for (long long i = 0; i < root_den; ++i) {
                p *= mid;
                if (p > x) { over = true; break; }
            }
            if (!over && p == x) return mid;
            if (over || p > x) hi = mid - 1; else lo = mid + 1;
        }
        return std::nullopt;
    };
    auto rn = iroot(v.num());
    auto rd = iroot(v.den());
    if (rn && rd) return Rational(*rn, *rd);
    return std::nullopt;
}

// Accumulator for one monomial product: canonical factors keyed by base,
// a ParamPoly coefficient, and polynomial expansions that the factor rules
// spun off (integer powers of polynomial bases, |A|^2 -> A^2).
struct MonoBuilder {
    ParamPoly coeff{Rational(1)};
    std::map<Expr, ExpoKey, bool (*)(const Expr&, const Expr&)> factors{
        [](const Expr& a, const Expr& b) { return cmp(a, b) < 0; }};
    std::vector<NormalExpr> pending;

    void factor(const Expr& base, const ExpoKey& e) {
        if (e.is_zero()) return;
        auto it = factors.find(base);
        if (it == factors.end()) factors.emplace(base, e);
        else {
            it->second = it->second + e;
            if (it->second.is_zero()) factors.erase(it);
        }
    }

    void emit(const Expr& base, const ExpoKey& e);

    NormalExpr finish() &&;
};

NormalExpr nx_poly_pow_int(const NormalExpr& base, long long k) {
    if (k == 0) return nx_one();
    NormalExpr b = base;
    if (k < 0) { b = nx_inv(b); k = -k; }
    NormalExpr r = b;
    for (long long i = 1; i < k; ++i) r = nx_mul(r, b);
    return r;
}

void MonoBuilder::emit(const Expr& base, const ExpoKey& e) {
    if (e.is_zero()) return;
    switch (classify(base)) {
        case BaseCat::Unit:
        case BaseCat::Opaque:
            factor(base, e);
            return;
        case BaseCat::Param: {
            Rational ip(e.r.floor());
            Rational frac = e.r - ip;
            if (!ip.is_zero()) coeff *= ParamPoly::var(base.symbol(), static_cast<int>(ip.num()));
            ExpoKey rest{frac, e.s};
            if (!rest.is_zero()) factor(base, rest);
            return;
        }
        case BaseCat::AbsB: {
            if (e.is_integer()) {
                long long k = e.r.num();
                long long m = ((k % 2) + 2) % 2;
                long long even = k - m;
                if (even != 0) pending.push_back(nx_poly_pow_int(normalize(base.kids()[0]), even));
                if (m != 0) factor(base, ExpoKey{Rational(m), {}});
                return;
            }
            factor(base, e);
            return;
        }
        case BaseCat::PolyB: {
            if (base.is_rat()) {
                if (e.is_integer()) {
                    coeff *= ParamPoly(base.rat().pow_int(e.r.num()));
                    return;
                }
                if (e.is_rational()) {
                    Rational ip(e.r.floor());
                    Rational frac = e.r - ip;
                    if (!ip.is_zero()) coeff *= ParamPoly(base.rat().pow_int(ip.num()));
                    if (auto root = rational_root(base.rat(), frac.den())) {
                        coeff *= ParamPoly(root->pow_int(frac.num()));
                        return;
                    }
                    factor(base, ExpoKey{frac, {}});
                    return;
                }
                factor(base, e);
                return;
            }
            Rational ip(e.r.floor());
            Rational frac = e.r - ip;
            if (!ip.is_zero()) pending.push_back(nx_poly_pow_int(normalize(base), ip.num()));
            ExpoKey rest{frac, e.s};
            if (!rest.is_zero()) factor(base, rest);
            return;
        }
    }
}

NormalExpr MonoBuilder::finish() && {
    Mono m;
    m.reserve(factors.size());
    for (const auto& [b, e] : factors) m.push_back({b, e});
    Poly p;
    p.add_term(m, coeff);
    NormalExpr r = nx_from_poly(std::move(p));
    for (const auto& f : pending) r = nx_mul(r, f);
    return r;
}

NormalExpr mono_product(const Mono& a, const ParamPoly& ca, const Mono& b, const ParamPoly& cb) {
    MonoBuilder mb;
    mb.coeff = ca * cb;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && cmp(a[i].base, b[j].base) < 0)) {
            mb.emit(a[i].base, a[i].exp);
            ++i;
        } else if (i == a.size() || cmp(b[j].base, a[i].base) < 0) {
            mb.emit(b[j].base, b[j].exp);
            ++j;
        } else {
            mb.emit(a[i].base, a[i].exp + b[j].exp);
            ++i; ++j;
        }
    }
    return std::move(mb).finish();
}

// ---------------------------------------------------------------------------
// Exact polynomial division, used to cancel numerators against denominator
// factors. Divisors must carry only integer exponents on unit-category bases
// so that the leading-term steps never re-canonicalize.

bool division_safe(const Poly& d) {
    for (const auto& [m, c] : d.t)
        for (const auto& f : m) {
            if (!f.exp.is_integer()) return false;
            BaseCat cat = classify(f.base);
            if (cat == BaseCat::PolyB || cat == BaseCat::AbsB) return false;
        }
    return true;
}

Mono mono_merge_plain(const Mono& a, const Mono& b) {
    Mono r;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && cmp(a[i].base, b[j].base) < 0)) r.push_back(a[i++]);
        else if (i == a.size() || cmp(b[j].base, a[i].base) < 0) r.push_back(b[j++]);
        else {
            ExpoKey e = a[i].exp + b[j].exp;
            if (!e.is_zero()) r.push_back({a[i].base, e});
            ++i; ++j;
        }
    }
    return r;
}

Mono mono_negate(const Mono& a) {
    Mono r = a;
    for (auto& f : r) f.exp = -f.exp;
    return r;
}

std::optional<Poly> poly_try_divide(const Poly& num, const Poly& d) {
    if (d.t.empty() || !division_safe(d)) return std::nullopt;
    Poly rem = num, q;
    const auto dl = *d.t.rbegin();
    int guard = static_cast<int>((num.t.size() + 1) * d.t.size()) * 4 + 128;
    while (!rem.t.empty()) {
        if (--guard < 0) return std::nullopt;
        const auto rl = *rem.t.rbegin();
        Mono tm = mono_merge_plain(rl.first, mono_negate(dl.first));
        auto tc = rl.second.try_divide(dl.second);
        if (!tc) return std::nullopt;
        Poly td;
        for (const auto& [m, c] : d.t) td.add_term(mono_merge_plain(tm, m), c * *tc);
        if (td.t.empty() || cmp_mono(td.t.rbegin()->first, rl.first) != 0) return std::nullopt;
        q.add_term(tm, *tc);
        for (const auto& [m, c] : td.t) rem.add_term(m, -c);
    }
    return q;
}

std::pair<Poly, Rational> canonical_factor(const Poly& p) {
    Rational c = p.content_signed();
    if (c.is_zero() || c.is_one()) return {p, Rational(1)};
    Poly q;
    ParamPoly inv(Rational(1) / c);
    for (const auto& [m, co] : p.t) q.add_term(m, co * inv);
    return {q, c};
}

void cancel(NormalExpr& a) {
    if (a.num.is_zero()) { a.den.clear(); return; }
    bool changed = true;
    while (changed && !a.den.empty()) {
        changed = false;
        for (auto it = a.den.begin(); it != a.den.end(); ++it) {
            if (auto q = poly_try_divide(a.num, it->first)) {
                a.num = std::move(*q);
                if (--it->second == 0) a.den.erase(it);
                changed = true;
                break;
            }
        }
        if (a.num.is_zero()) { a.den.clear(); return; }
    }
}

// Multiplies two numerator-only values. Monomial products of canonical
// monomials keep exponents in their canonical windows, so the result is
// numerator-only as well.
Poly poly_mul_numonly(const Poly& a, const Poly& b) {
    Poly acc;
    for (const auto& [ma, ca] : a.t)
        for (const auto& [mb, cb] : b.t) {
            NormalExpr t = mono_product(ma, ca, mb, cb);
            if (!t.den.empty())
                throw NormError("internal: unexpected denominator in polynomial product");
            for (const auto& [m, c] : t.num.t) acc.add_term(m, c);
        }
    return acc;
}

} // namespace

NormalExpr nx_rat(const Rational& r) {
    NormalExpr n;
    if (!r.is_zero()) n.num.add_term({}, ParamPoly(r));
    return n;
}

NormalExpr nx_neg(const NormalExpr& a) {
    NormalExpr r;
    for (const auto& [m, c] : a.num.t) r.num.add_term(m, -c);
    r.den = a.den;
    return r;
}

NormalExpr nx_add(const NormalExpr& a, const NormalExpr& b) {
    std::map<Poly, int, PolyLess> common = a.den;
    for (const auto& [p, k] : b.den) {
        auto it = common.find(p);
        if (it == common.end()) common[p] = k;
        else it->second = std::max(it->second, k);
    }
    auto scaled_num = [&](const NormalExpr& x) {
        Poly acc = x.num;
        for (const auto& [p, k] : common) {
            auto it = x.den.find(p);
            int need = k - (it == x.den.end() ? 0 : it->second);
            for (int i = 0; i < need; ++i) acc = poly_mul_numonly(acc, p);
        }
        return acc;
    };
    NormalExpr r;
    r.num = scaled_num(a);
    for (const auto& [m, c] : scaled_num(b).t) r.num.add_term(m, c);
    r.den = std::move(common);
    cancel(r);
    return r;
}

NormalExpr nx_sub(const NormalExpr& a, const NormalExpr& b) { return nx_add(a, nx_neg(b)); }

NormalExpr nx_mul(const NormalExpr& a, const NormalExpr& b) {
    NormalExpr r;
    for (const auto& [ma, ca] : a.num.t)
        for (const auto& [mb, cb] : b.num.t) {
            NormalExpr t = mono_product(ma, ca, mb, cb);
            if (t.den.empty()) {
                for (const auto& [m, c] : t.num.t) r.num.add_term(m, c);
            } else {
                r = nx_add(r, t); // rare: an expansion introduced a denominator
            }
        }
    for (const auto& [p, k] : a.den) r.den[p] += k;
    for (const auto& [p, k] : b.den) r.den[p] += k;
    if (r.num.is_zero()) r.den.clear();
    cancel(r);
    return r;
}

NormalExpr nx_pow_int(const NormalExpr& a, long long k) { return nx_poly_pow_int(a, k); }

// ---------------------------------------------------------------------------
// inversion

namespace {

struct SqrtSplit {
    Poly a, b;
    Expr sigma_base;
    ExpoKey sigma_exp;
    bool ok = false;
};

// Splits p as A + B*sigma where sigma is the unique fractional-power factor
// (exponent exactly 1/2); fails when several distinct radicals appear.
SqrtSplit split_single_sqrt(const Poly& p) {
    SqrtSplit s;
    bool have = false;
    for (const auto& [m, c] : p.t) {
        Mono rest;
        int count = 0;
        bool bad = false;
        for (const auto& f : m) {
            bool fractional = f.exp.is_rational() && !f.exp.r.is_integer();
            if (fractional) {
                ++count;
                if (count > 1) { bad = true; break; }
                if (!have) {
                    s.sigma_base = f.base;
                    s.sigma_exp = f.exp;
                    have = true;
                } else if (cmp(f.base, s.sigma_base) != 0 || !(f.exp == s.sigma_exp)) {
                    bad = true;
                    break;
                }
            } else {
                rest.push_back(f);
            }
        }
        if (bad) return SqrtSplit{};
        if (count == 0) s.a.add_term(m, c);
        else s.b.add_term(rest, c);
    }
    if (!have || !(s.sigma_exp.r == Rational(1, 2)) || !s.sigma_exp.s.is_zero()) return s;
    s.ok = true;
    return s;
}

thread_local int inv_depth = 0;

struct InvDepthGuard {
    InvDepthGuard() {
        if (++inv_depth > 8) {
            --inv_depth;
            throw NormError("inversion recursion limit exceeded");
        }
    }
    ~InvDepthGuard() { --inv_depth; }
};

} // namespace

NormalExpr nx_inv(const NormalExpr& a) {
    if (a.num.is_zero()) throw NormError("division by zero in normalization");
    InvDepthGuard guard;
    NormalExpr up = nx_one();
    for (const auto& [p, k] : a.den) up = nx_mul(up, nx_poly_pow_int(nx_from_poly(p), k));

    if (a.num.t.size() == 1) {
        const auto& [m, c] = *a.num.t.begin();
        NormalExpr r = up;
        if (auto ci = c.try_invert()) {
            Poly cp;
            cp.add_term({}, *ci);
            r = nx_mul(r, nx_from_poly(std::move(cp)));
        } else {
            Poly f;
            f.add_term({}, c);
            auto [cf, mult] = canonical_factor(f);
            r = nx_mul(r, nx_rat(Rational(1) / mult));
            NormalExpr dd = nx_one();
            dd.den[cf] = 1;
            r = nx_mul(r, dd);
        }
        MonoBuilder mb;
        for (const auto& f : m) mb.emit(f.base, -f.exp);
        return nx_mul(r, std::move(mb).finish());
    }

    auto s = split_single_sqrt(a.num);
    if (s.ok && !s.b.is_zero()) {
        // 1/(A + B*sqrt(P)) = (A - B*sqrt(P)) / (A^2 - B^2*P)
        NormalExpr A = nx_from_poly(s.a);
        NormalExpr B = nx_from_poly(s.b);
        MonoBuilder sb;
        sb.emit(s.sigma_base, s.sigma_exp);
        NormalExpr sigma = std::move(sb).finish();
        NormalExpr P = normalize(s.sigma_base);
        NormalExpr D = nx_sub(nx_mul(A, A), nx_mul(nx_mul(B, B), P));
        if (!D.num.is_zero()) {
            NormalExpr conj = nx_sub(A, nx_mul(B, sigma));
            return nx_mul(up, nx_mul(conj, nx_inv(D)));
        }
    }

    auto [cf, mult] = canonical_factor(a.num);
    NormalExpr r = nx_mul(up, nx_rat(Rational(1) / mult));
    NormalExpr dd = nx_one();
    dd.den[cf] = 1;
    return nx_mul(r, dd);
}

// ---------------------------------------------------------------------------
// normalize

namespace {

std::optional<ExpoKey> try_expo_key(const NormalExpr& n) {
    if (!n.den.empty()) return std::nullopt;
    ParamPoly total;
    for (const auto& [m, c] : n.num.t) {
        if (!m.empty()) return std::nullopt;
        total += c;
    }
    auto [cst, rest] = total.split_constant();
    return ExpoKey{cst, rest};
}

Expr canonical_arg(const Expr& a) { return render(normalize(a)); }

NormalExpr atom1(const Expr& base) {
    MonoBuilder mb;
    mb.emit(base, ExpoKey{Rational(1), {}});
    return std::move(mb).finish();
}

NormalExpr factor_power(const Expr& base, const ExpoKey& e) {
    MonoBuilder mb;
    mb.emit(base, e);
    return std::move(mb).finish();
}

ExpoKey expo_scale(const ExpoKey& e, const Rational& k) {
    ExpoKey r;
    r.r = e.r * k;
    r.s = e.s * ParamPoly(k);
    return r;
}

NormalExpr normalize_abs(const NormalExpr& na) {
    auto piece = [](const Poly& p) -> NormalExpr {
        if (p.t.empty()) return nx_rat(Rational(0));
        if (p.t.size() == 1 && p.t.begin()->first.empty() && p.t.begin()->second.is_constant())
            return nx_rat(p.t.begin()->second.constant_term().abs());
        auto [cf, mult] = canonical_factor(p);
        NormalExpr res = nx_rat(mult.abs().is_zero() ? Rational(1) : mult.abs());
        if (cf.t.size() == 1 && cf.t.begin()->second == ParamPoly(Rational(1)) &&
            cf.t.begin()->first.size() == 1 && cf.t.begin()->first[0].exp.is_integer()) {
            const auto& f = cf.t.begin()->first[0];
            return nx_mul(res, factor_power(ex::abs(f.base), f.exp));
        }
        return nx_mul(res, atom1(ex::abs(render(nx_from_poly(cf)))));
    };
    NormalExpr r = piece(na.num);
    for (const auto& [p, k] : na.den) r = nx_mul(r, nx_poly_pow_int(nx_inv(piece(p)), k));
    return r;
}

NormalExpr normalize_pow(const Expr& b, const Expr& e) {
    NormalExpr nb = normalize(b);
    NormalExpr en = normalize(e);
    auto key = try_expo_key(en);
    if (!key) return atom1(ex::pow(render(nb), render(en)));
    if (key->is_integer()) return nx_pow_int(nb, key->r.num());

    if (nb.num.is_zero()) {
        if (key->is_rational() && !key->r.is_negative()) return nx_rat(Rational(0));
        throw NormError("zero base raised to a negative or symbolic power");
    }

    // single unit-exponent factor with coefficient 1: merge the exponents
    if (nb.den.empty() && nb.num.t.size() == 1) {
        const auto& [m, c] = *nb.num.t.begin();
        if (c.is_constant() && c.constant_term().is_one()) {
            if (m.empty()) return nx_one();
            if (m.size() == 1 && m[0].exp == ExpoKey{Rational(1), {}})
                return factor_power(m[0].base, *key);
        }
    }

    // general case: canonical polynomial atom per numerator/denominator part
    NormalExpr r = nx_one();
    {
        auto [cf, mult] = canonical_factor(nb.num);
        if (mult.is_negative() && !key->is_integer()) {
            // don't split a negative content out from under a radical
            r = nx_mul(r, factor_power(render(nx_from_poly(nb.num)), *key));
        } else {
            if (!mult.is_one()) r = nx_mul(r, factor_power(ex::rat(mult), *key));
            Expr baseExpr = render(nx_from_poly(cf));
            if (!baseExpr.is_one()) r = nx_mul(r, factor_power(baseExpr, *key));
        }
    }
    for (const auto& [p, k] : nb.den)
        r = nx_mul(r, factor_power(render(nx_from_poly(p)), expo_scale(*key, Rational(-k))));
    return r;
}

} // namespace

NormalExpr normalize(const Expr& e) {
    if (!e.valid()) throw NormError("invalid expression");
    switch (e.kind()) {
        case Kind::Rat:
            return nx_rat(e.rat());
        case Kind::Symbol: {
            Sym s = e.symbol();
            if (is_param(s)) {
                Poly p;
                p.add_term({}, ParamPoly::var(s));
                return nx_from_poly(std::move(p));
            }
            return atom1(e);
        }
        case Kind::Sum: {
            NormalExpr r = nx_rat(Rational(0));
            for (const auto& k : e.kids()) r = nx_add(r, normalize(k));
            return r;
        }
        case Kind::Prod: {
            NormalExpr r = nx_one();
            for (const auto& k : e.kids()) r = nx_mul(r, normalize(k));
            return r;
        }
        case Kind::Pow:
            return normalize_pow(e.kids()[0], e.kids()[1]);
        case Kind::Sqrt:
            return normalize_pow(e.kids()[0], ex::rat(1, 2));
        case Kind::Ln: {
            Expr a = canonical_arg(e.kids()[0]);
            if (a.is_one()) return nx_rat(Rational(0));
            return atom1(ex::ln(a));
        }
        case Kind::Abs:
            return normalize_abs(normalize(e.kids()[0]));
        case Kind::Exp: {
            NormalExpr na = normalize(e.kids()[0]);
            if (na.is_zero()) return nx_one();
            return atom1(ex::exp(render(na)));
        }
        case Kind::App: {
            std::vector<Expr> args;
            args.reserve(e.kids().size());
            for (const auto& a : e.kids()) args.push_back(canonical_arg(a));
            return atom1(ex::app(e.symbol(), e.derivs(), std::move(args)));
        }
        case Kind::Integral:
            return atom1(
                ex::integral(canonical_arg(e.kids()[0]), canonical_arg(e.kids()[1]), e.rat()));
    }
    throw NormError("unhandled expression kind");
}

// ---------------------------------------------------------------------------
// render

namespace {

Expr render_mono(const Mono& m, const ParamPoly& c) {
    std::vector<Expr> fs;
    Expr coeff = c.render();
    if (!coeff.is_one() || m.empty()) fs.push_back(coeff);
    for (const auto& f : m) fs.push_back(ex::pow(f.base, f.exp.render()));
    return ex::prod(std::move(fs));
}

} // namespace

Expr render(const NormalExpr& n) {
    std::vector<Expr> terms;
    for (const auto& [m, c] : n.num.t) terms.push_back(render_mono(m, c));
    Expr numer = terms.empty() ? ex::rat(0) : ex::sum(std::move(terms));
    std::vector<Expr> fs;
    fs.push_back(numer);
    for (const auto& [p, k] : n.den) {
        std::vector<Expr> dterms;
        for (const auto& [m, c] : p.t) dterms.push_back(render_mono(m, c));
        fs.push_back(ex::pow(ex::sum(std::move(dterms)), ex::rat(-k)));
    }
    return ex::prod(std::move(fs));
}

Expr simplified(const Expr& e) { return render(normalize(e)); }

bool is_zero_expr(const Expr& e) { return normalize(e).is_zero(); }

bool equal_modulo_normal(const Expr& a, const Expr& b) {
    return nx_sub(normalize(a), normalize(b)).is_zero();
}

// ---------------------------------------------------------------------------
// collect_scales

std::vector<ScaleBucket> collect_scales(const Expr& e) {
    NormalExpr n = normalize(e);
    Sym x0 = sym::coord(0);
    Expr x0e = ex::x(0);
    Expr lnx0 = ex::ln(ex::x(0));
    for (const auto& [p, k] : n.den)
        for (const auto& [m, c] : p.t)
            for (const auto& f : m)
                if (mentions_symbol(f.base, x0))
                    throw NormError("x0 occurs in a denominator factor: " + format(f.base));

    std::map<std::pair<ExpoKey, int>, NormalExpr> buckets;
    for (const auto& [m, c] : n.num.t) {
        ExpoKey xePower{Rational(0), {}};
        int lnPower = 0;
        Mono rest;
        for (const auto& f : m) {
            if (struct_eq(f.base, x0e)) {
                xePower = xePower + f.exp;
            } else if (struct_eq(f.base, lnx0)) {
                if (!f.exp.is_integer() || f.exp.r.is_negative())
                    throw NormError("expression is not polynomial in ln(x0): exponent " +
                                    format(f.exp.render()));
                lnPower = static_cast<int>(f.exp.r.num());
            } else if (mentions_symbol(f.base, x0)) {
                throw NormError("cannot decide x0 scale of atom " + format(f.base) +
                                " (exponent " + format(f.exp.render()) + ")");
            } else {
                rest.push_back(f);
            }
        }
        NormalExpr piece;
        piece.num.add_term(rest, c);
        piece.den = n.den;
        auto key = std::make_pair(xePower, lnPower);
        auto it = buckets.find(key);
        if (it == buckets.end()) buckets.emplace(key, piece);
        else it->second = nx_add(it->second, piece);
    }
    std::vector<ScaleBucket> out;
    out.reserve(buckets.size());
    for (auto& [key, nx] : buckets) out.push_back({key.first, key.second, render(nx)});
    return out;
}

} // namespace condsym
