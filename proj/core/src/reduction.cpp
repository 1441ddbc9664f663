#include "condsym/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "condsym/calculus.hpp"
#include "condsym/eval.hpp"
#include "condsym/waveforms.hpp"

namespace condsym::reduction {

namespace {
std::vector<Expr> omega_args(int n) {
    std::vector<Expr> args;
    args.reserve(n);
    for (int a = 1; a <= n; ++a) args.push_back(ex::div(ex::x(a), ex::x(0)));
    return args;
}
} // namespace

Expr Ansatz::as_expr() const {
    std::vector<Expr> ts;
    for (const auto& t : terms)
        ts.push_back(ex::mul(t.scale, ex::app(t.fname, {}, omega_args(n))));
    return ex::sum(std::move(ts));
}

Expr anz1_beta_paper(const Expr& alpha) { return alpha; }
Expr anz1_beta_euler(const Expr& alpha) { return ex::neg(alpha); }

Ansatz ansatz_anz1(int n, const Expr& beta) {
    Ansatz a;
    a.n = n;
    a.label = "anz1(beta=" + format(beta) + ")";
    a.terms = {{ex::pow(ex::x(0), beta), sym::phi()}};
    return a;
}

Ansatz ansatz_anz2(int n, const Expr& alpha) {
    Ansatz a;
    a.n = n;
    a.label = "anz2(alpha=" + format(alpha) + ")";
    bool alpha_one = alpha.is_rat() && alpha.rat() == Rational(1);
    if (alpha_one) {
        a.terms = {{ex::rat(1), sym::psi()}, {ex::ln(ex::x(0)), sym::phi()}};
    } else {
        a.terms = {{ex::pow(ex::x(0), ex::sub(ex::rat(1), alpha)), sym::psi()},
                   {ex::rat(1), sym::phi()}};
    }
    return a;
}

Expr substitute_ansatz(const lie::PDESystem& sys, const Ansatz& a) {
    if (sys.equations.size() != 1)
        throw ReductionError("ansatz substitution needs a single scalar equation");
    if (sys.n != a.n) throw ReductionError("ansatz dimension does not match the system");
    const Expr& residual = sys.equations[0];
    {
        std::vector<Sym> syms;
        collect_symbols(residual, syms);
        for (Sym s : syms)
            if (SymTab::instance().kind(s) == SymKind::Function && s != sym::u())
                throw ReductionError(
                    "nonlinearity is incompatible with x0-scale splitting; only F = 0 reduces "
                    "here");
    }
    Subst bind;
    FuncBinding fb;
    for (int mu = 0; mu <= sys.n; ++mu) fb.formals.push_back(sym::coord(mu));
    fb.body = a.as_expr();
    bind.funcs[sym::u()] = fb;
    Expr e = substitute(residual, bind);

    Subst change;
    for (int aa = 1; aa <= sys.n; ++aa)
        change.atoms[ex::x(aa)] = ex::mul(ex::w(aa), ex::x(0));
    e = substitute(e, change);
    return implicitize(render(normalize(e)));
}

namespace {

std::vector<Sym> unknowns_of(const Expr& e) {
    std::vector<Sym> syms, out;
    collect_symbols(e, syms);
    for (Sym s : syms)
        if (SymTab::instance().kind(s) == SymKind::Function && s != sym::u())
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

Expr canon_content(const Expr& e) {
    NormalExpr nx = normalize(e);
    Rational c = nx.num.content_signed();
    if (c.is_zero() || c.is_one()) return render(nx);
    return render(nx_mul(nx, nx_rat(Rational(1) / c)));
}

} // namespace

ReducedSystem split_by_scale(const Expr& e, int n) {
    ReducedSystem rs;
    rs.n = n;
    for (const auto& bucket : collect_scales(e)) {
        ReducedEquation eq;
        eq.scale_x0 = bucket.x0_power;
        eq.scale_ln = bucket.ln_power;
        eq.raw = bucket.content;
        eq.eq = canon_content(bucket.content);
        eq.unknowns = unknowns_of(eq.eq);
        rs.equations.push_back(std::move(eq));
    }
    return rs;
}

ReducedSystem derive_anz1(int n, const Expr& beta) {
    lie::PDESystem wave = waveforms::build_wave(n);
    Ansatz a = ansatz_anz1(n, beta);
    ReducedSystem rs = split_by_scale(substitute_ansatz(wave, a), n);
    rs.label = a.label;
    return rs;
}

ReducedSystem derive_anz2(int n, const Expr& alpha) {
    lie::PDESystem wave = waveforms::build_wave(n);
    Ansatz a = ansatz_anz2(n, alpha);
    ReducedSystem rs = split_by_scale(substitute_ansatz(wave, a), n);
    rs.label = a.label;
    return rs;
}

// ---------------------------------------------------------------------------
// pattern extraction

std::optional<std::map<Sym, ContractionPattern>> extract_patterns(const Expr& eq, int n,
                                                                  std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return std::nullopt;
    };
    NormalExpr nx = normalize(eq);
    if (!nx.den.empty()) return fail("equation has a nontrivial denominator");

    // per unknown: grad[a], lapl[a], hess_diag[a], hess_off[(a,b)] candidates
    struct Acc {
        std::map<int, ParamPoly> grad, lap, hdiag;
        std::map<std::pair<int, int>, ParamPoly> hoff;
        ParamPoly plain;
    };
    std::map<Sym, Acc> acc;

    for (const auto& [m, c] : nx.num.t) {
        const Expr* marker = nullptr;
        Mono rest;
        for (const auto& f : m) {
            if (f.base.kind() == Kind::App && f.base.symbol() != sym::u() &&
                f.base.kids().empty()) {
                if (marker || !(f.exp == ExpoKey{Rational(1), {}}))
                    return fail("monomial is not linear in the unknown functions: " +
                                format(render(nx)));
                marker = &f.base;
            } else {
                rest.push_back(f);
            }
        }
        if (!marker) return fail("monomial without an unknown-function factor");
        Sym fn = marker->symbol();
        const auto& J = marker->derivs();
        // the remaining factors must be a pure w-monomial
        std::map<int, long long> wpow;
        for (const auto& f : rest) {
            if (f.base.kind() != Kind::Symbol ||
                SymTab::instance().kind(f.base.symbol()) != SymKind::Invariant ||
                !f.exp.is_integer() || f.exp.r.is_negative())
                return fail("coefficient atom outside the w-monomial shape: " + format(f.base));
            wpow[SymTab::instance().index(f.base.symbol())] = f.exp.r.num();
        }
        Acc& A = acc[fn];
        if (J.empty()) {
            if (!wpow.empty()) return fail("bare unknown multiplied by w factors");
            A.plain += c;
        } else if (J.size() == 1) {
            int a = J[0];
            if (wpow.size() == 1 && wpow.count(a) && wpow[a] == 1) A.grad[a] += c;
            else return fail("first-derivative term outside the w_a*f_a pattern");
        } else if (J.size() == 2) {
            int a = J[0], b = J[1];
            if (a == b) {
                if (wpow.empty()) A.lap[a] += c;
                else if (wpow.size() == 1 && wpow.count(a) && wpow[a] == 2) A.hdiag[a] += c;
                else return fail("second-derivative term outside the contraction patterns");
            } else {
                if (wpow.size() == 2 && wpow.count(a) && wpow.count(b) && wpow[a] == 1 &&
                    wpow[b] == 1)
                    A.hoff[{a, b}] += c;
                else return fail("mixed-derivative term outside the w_a*w_b*f_ab pattern");
            }
        } else {
            return fail("derivative order above 2");
        }
    }

    std::map<Sym, ContractionPattern> out;
    for (auto& [fn, A] : acc) {
        ContractionPattern P;
        P.plain = A.plain;
        auto consistent = [&](const std::map<int, ParamPoly>& per_index, int count,
                              ParamPoly& val) {
            if (per_index.empty()) { val = ParamPoly(); return true; }
            if (static_cast<int>(per_index.size()) != count) return false;
            val = per_index.begin()->second;
            for (const auto& [i, v] : per_index)
                if (!(v == val)) return false;
            return true;
        };
        if (!consistent(A.grad, n, P.grad)) return fail("w_a f_a coefficients differ across a");
        if (!consistent(A.lap, n, P.lap)) return fail("f_aa coefficients differ across a");
        ParamPoly hd;
        if (!consistent(A.hdiag, n, hd)) return fail("w_a^2 f_aa coefficients differ across a");
        // off-diagonal coefficient should be 2*hd (both orderings collapse
        // onto the sorted marker)
        if (!A.hoff.empty()) {
            if (static_cast<int>(A.hoff.size()) != n * (n - 1) / 2)
                return fail("incomplete w_a w_b f_ab pattern");
            ParamPoly twice = A.hoff.begin()->second;
            for (const auto& [k, v] : A.hoff)
                if (!(v == twice)) return fail("w_a w_b f_ab coefficients differ across (a,b)");
            if (!(twice == hd + hd)) return fail("off-diagonal hessian coefficient is not twice "
                                                 "the diagonal one");
        } else if (!hd.is_zero() && n > 1) {
            return fail("diagonal hessian terms without off-diagonal partners");
        }
        P.hess = hd;
        out[fn] = P;
    }
    if (why) why->clear();
    return out;
}

// ---------------------------------------------------------------------------
// projection

Expr project_ode(const Expr& eq, int n, ProjMode mode, const std::vector<Rational>& m) {
    std::string why;
    auto pats = extract_patterns(eq, n, &why);
    if (!pats)
        throw ReductionError("equation does not have the contraction shape needed for "
                             "projection: " + why);
    if (mode == ProjMode::Directional) {
        if (static_cast<int>(m.size()) != n)
            throw ReductionError("directional projection needs an n-component m");
        Rational norm(0);
        for (const auto& mi : m) norm += mi * mi;
        if (!(norm == Rational(1)))
            throw ReductionError("m is not a rational unit vector (m_a m_a = " + norm.str() + ")");
    }
    Expr w = ex::wrad();
    std::vector<Expr> terms;
    for (const auto& [fn, P] : *pats) {
        Expr f = ex::fapp(fn);
        Expr f1 = ex::fjet(fn, {1});
        Expr f2 = ex::fjet(fn, {1, 1});
        Expr plain = P.plain.render(), grad = P.grad.render(), hess = P.hess.render(),
             lap = P.lap.render();
        if (mode == ProjMode::Directional) {
            // f_a -> m_a f', f_ab -> m_a m_b f''; contractions use m_a m_a = 1
            terms.push_back(ex::mul(plain, f));
            terms.push_back(ex::prod({grad, w, f1}));
            terms.push_back(ex::prod({hess, ex::pow(w, ex::rat(2)), f2}));
            terms.push_back(ex::mul(lap, f2));
        } else {
            // w = w_a w_a: f_a -> 2 w_a f', f_ab -> 2 d_ab f' + 4 w_a w_b f'';
            // the trace contraction brings in delta_aa = n symbolically
            Expr nsym = ex::symbol(sym::nparam());
            terms.push_back(ex::mul(plain, f));
            terms.push_back(ex::prod({ex::rat(2), grad, w, f1}));
            terms.push_back(ex::prod({ex::rat(2), hess, w, f1}));
            terms.push_back(ex::prod({ex::rat(4), hess, ex::pow(w, ex::rat(2)), f2}));
            terms.push_back(ex::prod({ex::rat(2), lap, nsym, f1}));
            terms.push_back(ex::prod({ex::rat(4), lap, w, f2}));
        }
    }
    return canonical_ode(ex::sum(std::move(terms)));
}

Expr canonical_ode(const Expr& ode) {
    NormalExpr nx = normalize(ode);
    Rational c = nx.num.content_signed();
    if (!c.is_zero() && !c.is_one()) nx = nx_mul(nx, nx_rat(Rational(1) / c));
    // positive leading sign on the f'' coefficient
    Poly second;
    for (const auto& [m, co] : nx.num.t)
        for (const auto& f : m)
            if (f.base.kind() == Kind::App && f.base.derivs().size() == 2 &&
                f.base.kids().empty()) {
                second.add_term(m, co);
                break;
            }
    if (!second.is_zero() && second.content_signed().is_negative()) nx = nx_neg(nx);
    return render(nx);
}

// ---------------------------------------------------------------------------
// comparison

namespace {

Expr canon_for_compare(const Expr& e, bool ode) {
    return ode ? canonical_ode(e) : canon_content(e);
}

std::string pattern_label(Sym fn, int which) {
    std::string f = SymTab::instance().name(fn);
    switch (which) {
        case 0: return f;
        case 1: return "w_a*D[" + f + ",a]";
        case 2: return "w_a*w_b*D[" + f + ",a,b]";
        default: return "D[" + f + ",a,a]";
    }
}

// ODE rows: coefficients of f, f', f'' as polynomials in w.
std::map<std::string, Expr> ode_coefficients(const Expr& e) {
    std::map<std::string, Expr> rows;
    NormalExpr nx = normalize(e);
    std::map<std::string, NormalExpr> acc;
    for (const auto& [m, c] : nx.num.t) {
        std::string key;
        Mono rest;
        for (const auto& f : m) {
            if (f.base.kind() == Kind::App && f.base.symbol() != sym::u() &&
                f.base.kids().empty()) {
                std::string fname = SymTab::instance().name(f.base.symbol());
                key = fname + std::string(f.base.derivs().size(), '\'');
            } else {
                rest.push_back(f);
            }
        }
        if (key.empty()) key = "1";
        NormalExpr piece;
        piece.num.add_term(rest, c);
        auto it = acc.find(key);
        if (it == acc.end()) acc.emplace(key, piece);
        else it->second = nx_add(it->second, piece);
    }
    for (auto& [k, v] : acc) rows[k] = render(v);
    return rows;
}

} // namespace

DiffReport compare_with_paper(const Expr& derived, const Expr& fixture, int n,
                              const std::string& fixture_id, bool ode) {
    DiffReport rep;
    rep.fixture_id = fixture_id;
    auto du = unknowns_of(derived);
    auto fu = unknowns_of(fixture);
    if (du != fu) {
        rep.verdict = "incomparable";
        rep.note = "equations involve different unknown functions";
        return rep;
    }
    Expr dc = canon_for_compare(derived, ode);
    Expr fc = canon_for_compare(fixture, ode);
    bool match = nx_sub(normalize(dc), normalize(fc)).is_zero();
    rep.verdict = match ? "match" : "mismatch";

    if (ode) {
        auto dr = ode_coefficients(dc);
        auto fr = ode_coefficients(fc);
        std::vector<std::string> keys;
        for (const auto& [k, v] : dr) keys.push_back(k);
        for (const auto& [k, v] : fr)
            if (!dr.count(k)) keys.push_back(k);
        for (const auto& k : keys) {
            DiffRow row;
            row.term = k;
            Expr dcoef = dr.count(k) ? dr[k] : ex::rat(0);
            Expr fcoef = fr.count(k) ? fr[k] : ex::rat(0);
            row.derived = format(dcoef);
            row.fixture = format(fcoef);
            row.equal = equal_modulo_normal(dcoef, fcoef);
            if (!row.equal) rep.mismatched_terms.push_back(k);
            rep.rows.push_back(std::move(row));
        }
        return rep;
    }

    auto dp = extract_patterns(dc, n);
    auto fp = extract_patterns(fc, n);
    if (dp && fp) {
        for (const auto& [fn, P] : *dp) {
            ContractionPattern F;
            auto it = fp->find(fn);
            if (it != fp->end()) F = it->second;
            const ParamPoly* dcoefs[4] = {&P.plain, &P.grad, &P.hess, &P.lap};
            const ParamPoly* fcoefs[4] = {&F.plain, &F.grad, &F.hess, &F.lap};
            for (int which = 0; which < 4; ++which) {
                if (dcoefs[which]->is_zero() && fcoefs[which]->is_zero()) continue;
                DiffRow row;
                row.term = pattern_label(fn, which);
                row.derived = dcoefs[which]->str();
                row.fixture = fcoefs[which]->str();
                row.equal = *dcoefs[which] == *fcoefs[which];
                if (!row.equal) rep.mismatched_terms.push_back(row.term);
                rep.rows.push_back(std::move(row));
            }
        }
    } else {
        DiffRow row;
        row.term = "(whole equation)";
        row.derived = format(dc);
        row.fixture = format(fc);
        row.equal = match;
        if (!match) rep.mismatched_terms.push_back(row.term);
        rep.rows.push_back(std::move(row));
        rep.note = "equations outside the contraction shape; compared as a whole";
    }
    return rep;
}

std::vector<DiffReport> compare_system_with_paper(const ReducedSystem& derived,
                                                  const std::vector<Expr>& fixture_lines, int n,
                                                  const std::string& fixture_id) {
    std::vector<DiffReport> out;
    std::vector<bool> used(derived.equations.size(), false);
    int line_no = 0;
    for (const auto& line : fixture_lines) {
        ++line_no;
        auto lu = unknowns_of(line);
        int pick = -1;
        for (std::size_t i = 0; i < derived.equations.size(); ++i) {
            if (used[i]) continue;
            if (derived.equations[i].unknowns == lu) { pick = static_cast<int>(i); break; }
        }
        if (pick < 0) {
            // fall back to any unused equation sharing the principal unknown
            for (std::size_t i = 0; i < derived.equations.size(); ++i) {
                if (used[i]) continue;
                if (!lu.empty() &&
                    std::find(derived.equations[i].unknowns.begin(),
                              derived.equations[i].unknowns.end(),
                              lu.back()) != derived.equations[i].unknowns.end()) {
                    pick = static_cast<int>(i);
                    break;
                }
            }
        }
        std::string id = fixture_id + " line " + std::to_string(line_no);
        if (pick < 0) {
            DiffReport rep;
            rep.fixture_id = id;
            rep.verdict = "incomparable";
            rep.note = "no derived equation with matching unknowns";
            out.push_back(std::move(rep));
            continue;
        }
        used[pick] = true;
        out.push_back(compare_with_paper(derived.equations[pick].eq, line, n, id, false));
    }
    return out;
}

// ---------------------------------------------------------------------------
// numeric arbitration

Expr compose_anz1_field(int n, const Expr& beta_value, const FuncBinding& phi0) {
    Ansatz a = ansatz_anz1(n, beta_value);
    Subst s;
    s.funcs[sym::phi()] = phi0;
    return substitute(a.as_expr(), s);
}

OracleResult oracle_vs_box(const Expr& expr, const Expr& u_composed,
                           const std::map<Sym, double>& params, const FuncBinding& phi0, int n,
                           int points, std::uint64_t seed, const lie::Region& region,
                           const numerics::FDConfig& cfg) {
    numerics::ScalarField field;
    field.dim = n + 1;
    field.eval = [&](std::span<const double> x) {
        Assignment a;
        a.vars = params;
        for (int mu = 0; mu <= n; ++mu) a.vars[sym::coord(mu)] = x[mu];
        return eval_numeric(u_composed, a);
    };
    numerics::DiffOp box{numerics::DiffOp::Type::Box, n, 0.0};

    OracleResult res;
    res.points = points;
    for (int i = 0; i < points; ++i) {
        lie::DetRng rng(seed + 0xA24BAED4963EE407ULL * static_cast<std::uint64_t>(i + 1));
        std::vector<double> x(n + 1);
        for (int mu = 0; mu <= n; ++mu)
            x[mu] = rng.uniform(region.coord[mu].first, region.coord[mu].second);
        double lhs = numerics::fd_operator_residual(field, box, x, cfg);
        Assignment a;
        a.vars = params;
        a.funcs[sym::phi()] = phi0;
        for (int mu = 0; mu <= n; ++mu) a.vars[sym::coord(mu)] = x[mu];
        for (int aa = 1; aa <= n; ++aa) a.vars[sym::invariant(aa)] = x[aa] / x[0];
        double rhs = eval_numeric(expr, a);
        double dev = std::fabs(lhs - rhs) / std::max(1.0, std::fabs(lhs));
        res.max_rel_dev = std::max(res.max_rel_dev, dev);
    }
    return res;
}

OracleResult arbitrate_anz1(const Expr& candidate_eq_times_scale, const Expr& beta_value, int n,
                            const FuncBinding& phi0, int points, std::uint64_t seed,
                            const numerics::FDConfig& cfg) {
    Expr u = compose_anz1_field(n, beta_value, phi0);
    lie::Region region = lie::Region::defaults(n);
    return oracle_vs_box(candidate_eq_times_scale, u, {}, phi0, n, points, seed, region, cfg);
}

} // namespace condsym::reduction
