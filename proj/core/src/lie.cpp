#include "condsym/lie.hpp"

#include <algorithm>
#include <cmath>

#include "condsym/normal.hpp"

namespace condsym::lie {

bool VectorField::xi_depends_on_u() const {
    for (const auto& c : xi)
        if (mentions_symbol(c, sym::u())) return true;
    return false;
}

Region Region::defaults(int n) {
    Region r;
    r.coord.assign(n + 1, {1.0, 2.0});
    return r;
}

std::uint64_t DetRng::next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double DetRng::next01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

ProlongedField prolong2(const VectorField& v) {
    if (static_cast<int>(v.xi.size()) != v.n + 1)
        throw LieError("vector field has " + std::to_string(v.xi.size()) +
                       " coefficients for n = " + std::to_string(v.n));
    ProlongedField p;
    p.base = v;
    int N = v.n;
    p.eta1.resize(N + 1);
    for (int mu = 0; mu <= N; ++mu) {
        // eta^mu = D_mu(eta) - u_nu D_mu(xi^nu)
        std::vector<Expr> terms;
        terms.push_back(differentiate(v.eta, sym::coord(mu)));
        for (int nu = 0; nu <= N; ++nu) {
            Expr d = differentiate(v.xi[nu], sym::coord(mu));
            if (d.is_zero()) continue;
            terms.push_back(ex::neg(ex::mul(ex::ujet({static_cast<std::uint8_t>(nu)}), d)));
        }
        p.eta1[mu] = ex::sum(std::move(terms));
    }
    p.eta2.assign(N + 1, std::vector<Expr>(N + 1));
    for (int mu = 0; mu <= N; ++mu)
        for (int nu = mu; nu <= N; ++nu) {
            // eta^{mu nu} = D_nu(eta^mu) - u_{mu sigma} D_nu(xi^sigma)
            std::vector<Expr> terms;
            terms.push_back(differentiate(p.eta1[mu], sym::coord(nu)));
            for (int sg = 0; sg <= N; ++sg) {
                Expr d = differentiate(v.xi[sg], sym::coord(nu));
                if (d.is_zero()) continue;
                terms.push_back(ex::neg(ex::mul(
                    ex::ujet({static_cast<std::uint8_t>(std::min(mu, sg)),
                              static_cast<std::uint8_t>(std::max(mu, sg))}),
                    d)));
            }
            Expr val = ex::sum(std::move(terms));
            p.eta2[mu][nu] = val;
            p.eta2[nu][mu] = val;
        }
    return p;
}

Expr apply_prolonged(const ProlongedField& p, const Expr& eq) {
    if (jet_order(eq, sym::u()) > 2) throw LieError("equation has jet order above 2");
    int N = p.base.n;
    std::vector<Expr> terms;
    for (int mu = 0; mu <= N; ++mu) {
        Expr d = diff_atom(eq, ex::x(mu));
        if (!d.is_zero()) terms.push_back(ex::mul(p.base.xi[mu], d));
    }
    {
        Expr d = diff_atom(eq, ex::u());
        if (!d.is_zero()) terms.push_back(ex::mul(p.base.eta, d));
    }
    for (int mu = 0; mu <= N; ++mu) {
        Expr d = diff_atom(eq, ex::ujet({static_cast<std::uint8_t>(mu)}));
        if (!d.is_zero()) terms.push_back(ex::mul(p.eta1[mu], d));
    }
    for (int mu = 0; mu <= N; ++mu)
        for (int nu = mu; nu <= N; ++nu) {
            Expr d = diff_atom(eq, ex::ujet({static_cast<std::uint8_t>(mu),
                                             static_cast<std::uint8_t>(nu)}));
            if (!d.is_zero()) terms.push_back(ex::mul(p.eta2[mu][nu], d));
        }
    return ex::sum(std::move(terms));
}

VectorField bracket(const VectorField& a, const VectorField& b) {
    if (a.n != b.n) throw LieError("bracket of fields with different n");
    auto act = [&](const VectorField& v, const Expr& f) {
        std::vector<Expr> terms;
        for (int mu = 0; mu <= v.n; ++mu) {
            Expr d = diff_atom(f, ex::x(mu));
            if (!d.is_zero()) terms.push_back(ex::mul(v.xi[mu], d));
        }
        Expr du = diff_atom(f, ex::u());
        if (!du.is_zero()) terms.push_back(ex::mul(v.eta, du));
        return ex::sum(std::move(terms));
    };
    VectorField c;
    c.n = a.n;
    c.name = "[" + a.name + "," + b.name + "]";
    c.xi.reserve(a.n + 1);
    for (int mu = 0; mu <= a.n; ++mu)
        c.xi.push_back(simplified(ex::sub(act(a, b.xi[mu]), act(b, a.xi[mu]))));
    c.eta = simplified(ex::sub(act(a, b.eta), act(b, a.eta)));
    return c;
}

std::optional<Expr> apply_solved_stages(const PDESystem& sys, const Expr& e) {
    Expr cur = e;
    for (const auto& stage : sys.stages) {
        Subst s;
        for (const auto& sf : stage) s.atoms[sf.jet] = sf.rhs;
        for (int iter = 0; iter < 8; ++iter) {
            bool present = false;
            for (const auto& sf : stage)
                if (contains_subexpr(cur, sf.jet)) { present = true; break; }
            if (!present) break;
            cur = substitute(cur, s);
        }
    }
    for (const auto& stage : sys.stages)
        for (const auto& sf : stage)
            if (contains_subexpr(cur, sf.jet)) return std::nullopt;
    return cur;
}

Verdict check_invariance_symbolic(const PDESystem& sys, const VectorField& v) {
    Verdict verdict;
    verdict.mode = "symbolic";
    ProlongedField p = prolong2(v);
    bool all_zero = true;
    for (const auto& eq : sys.equations) {
        Expr action = apply_prolonged(p, eq);
        auto reduced = apply_solved_stages(sys, action);
        if (!reduced) {
            verdict.status = Invariance::Inconclusive;
            verdict.note = "solved-form substitution did not close on the prolonged action";
            return verdict;
        }
        NormalExpr nr = normalize(*reduced);
        if (!nr.is_zero()) {
            all_zero = false;
            verdict.residuals.push_back(format(render(nr)));
        }
    }
    verdict.status = all_zero ? Invariance::Invariant : Invariance::NotInvariant;
    return verdict;
}

// ---------------------------------------------------------------------------
// on-manifold sampling

namespace {

struct JetSlot {
    int order;
    int i = 0, j = 0;
};

JetSlot slot_of(const Expr& jet) {
    if (jet.kind() != Kind::App || jet.symbol() != sym::u())
        throw LieError("leading jet is not a u-jet: " + format(jet));
    const auto& d = jet.derivs();
    if (d.size() == 1) return {1, d[0], 0};
    if (d.size() == 2) return {2, d[0], d[1]};
    throw LieError("leading jet of unsupported order: " + format(jet));
}

void set_slot(JetVals& jv, const JetSlot& s, double val) {
    if (s.order == 1) {
        jv.du[s.i] = val;
    } else {
        jv.d2u[s.i][s.j] = val;
        jv.d2u[s.j][s.i] = val;
    }
}

// Gaussian elimination with partial pivoting; returns false when singular.
bool solve_dense(std::vector<std::vector<double>>& A, std::vector<double>& b) {
    int m = static_cast<int>(A.size());
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
        if (std::fabs(A[piv][col]) < 1e-10) return false;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < m; ++r) {
            double f = A[r][col] / A[col][col];
            for (int c2 = col; c2 < m; ++c2) A[r][c2] -= f * A[col][c2];
            b[r] -= f * b[col];
        }
    }
    for (int r = m - 1; r >= 0; --r) {
        for (int c2 = r + 1; c2 < m; ++c2) b[r] -= A[r][c2] * b[c2];
        b[r] /= A[r][r];
    }
    return true;
}

} // namespace

JetVals sample_on_manifold(const PDESystem& sys, const Region& region, std::uint64_t seed,
                           const std::map<Sym, double>& params) {
    int N = sys.n;
    if (static_cast<int>(region.coord.size()) != N + 1)
        throw LieError("region dimension does not match the system");
    for (const auto& [lo, hi] : region.coord)
        if (!(lo < hi)) throw LieError("empty region interval");
    {
        auto [lo, hi] = region.coord[0];
        if (lo <= 0.05 && hi >= -0.05)
            throw LieError("region touches the singular set x0 = 0");
    }

    std::vector<Expr> all_eqs = sys.equations;
    all_eqs.insert(all_eqs.end(), sys.consequences.begin(), sys.consequences.end());
    int m = static_cast<int>(sys.leading.size());
    if (m != static_cast<int>(all_eqs.size()))
        throw LieError("system is not square: " + std::to_string(all_eqs.size()) +
                       " constraints for " + std::to_string(m) + " leading jets");
    std::vector<JetSlot> slots;
    slots.reserve(m);
    for (const auto& l : sys.leading) slots.push_back(slot_of(l));

    for (int attempt = 0; attempt < 40; ++attempt) {
        DetRng rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt));
        JetVals jv;
        jv.x.resize(N + 1);
        for (int i = 0; i <= N; ++i)
            jv.x[i] = rng.uniform(region.coord[i].first, region.coord[i].second);
        auto [jlo, jhi] = region.jet;
        jv.u = rng.uniform(jlo, jhi);
        jv.du.resize(N + 1);
        for (auto& d : jv.du) d = rng.uniform(jlo, jhi);
        jv.d2u.assign(N + 1, std::vector<double>(N + 1));
        for (int i = 0; i <= N; ++i)
            for (int j = i; j <= N; ++j) {
                double v = rng.uniform(jlo, jhi);
                jv.d2u[i][j] = v;
                jv.d2u[j][i] = v;
            }

        Assignment base;
        base.vars = params;
        base.jets = &jv;
        auto eval_all = [&](std::vector<double>& out) {
            out.resize(m);
            for (int i = 0; i < m; ++i) out[i] = eval_numeric(all_eqs[i], base);
        };

        // residuals are affine in the leading jets: r(z) = A z + b
        for (const auto& s : slots) set_slot(jv, s, 0.0);
        std::vector<double> b;
        eval_all(b);
        std::vector<std::vector<double>> A(m, std::vector<double>(m));
        for (int k = 0; k < m; ++k) {
            set_slot(jv, slots[k], 1.0);
            std::vector<double> col;
            eval_all(col);
            for (int i = 0; i < m; ++i) A[i][k] = col[i] - b[i];
            set_slot(jv, slots[k], 0.0);
        }
        std::vector<double> rhs(m);
        for (int i = 0; i < m; ++i) rhs[i] = -b[i];
        if (!solve_dense(A, rhs)) continue;
        for (int k = 0; k < m; ++k) set_slot(jv, slots[k], rhs[k]);

        double worst = 0;
        std::vector<double> res;
        eval_all(res);
        for (double r : res) worst = std::max(worst, std::fabs(r));
        if (worst <= 1e-12) return jv;
    }
    throw LieError("could not produce an on-manifold sample (degenerate solved forms?)");
}

Verdict check_invariance_numeric(const PDESystem& sys, const VectorField& v,
                                 const std::map<Sym, double>& params, int samples,
                                 std::uint64_t seed, double tol, const Region& region) {
    Verdict verdict;
    verdict.mode = "numeric";
    verdict.samples = samples;
    verdict.seed = seed;
    verdict.tolerance = tol;
    ProlongedField p = prolong2(v);
    std::vector<Expr> residuals;
    residuals.reserve(sys.equations.size());
    for (const auto& eq : sys.equations) residuals.push_back(apply_prolonged(p, eq));

    double worst = 0;
    std::vector<double> argmax;
    for (int i = 0; i < samples; ++i) {
        JetVals jv = sample_on_manifold(sys, region,
                                        seed + 0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(i + 1),
                                        params);
        Assignment a;
        a.vars = params;
        a.jets = &jv;
        for (const auto& r : residuals) {
            double val = std::fabs(eval_numeric(r, a));
            if (val > worst) {
                worst = val;
                argmax = jv.x;
            }
        }
    }
    verdict.max_residual = worst;
    verdict.argmax_x = argmax;
    verdict.status = worst <= tol ? Invariance::Invariant : Invariance::NotInvariant;
    return verdict;
}

// ---------------------------------------------------------------------------
// flows

namespace {

double eval_coeff(const Expr& c, std::span<const double> x, double uval, int n) {
    JetVals jv;
    jv.x.assign(x.begin(), x.end());
    jv.u = uval;
    jv.du.assign(n + 1, 0.0);
    jv.d2u.assign(n + 1, std::vector<double>(n + 1, 0.0));
    Assignment a;
    a.jets = &jv;
    return eval_numeric(c, a);
}

} // namespace

double flow_transform(const VectorField& v, const numerics::ScalarField& f, double epsilon,
                      std::span<const double> probe, int steps) {
    if (v.xi_depends_on_u())
        throw LieError("flow transport requires xi independent of u");
    int N = v.n;
    if (static_cast<int>(probe.size()) != N + 1) throw LieError("probe dimension mismatch");

    // backward x-flow to the source point
    numerics::OdeRhs back = [&](const std::vector<double>& X) {
        std::vector<double> d(N + 1);
        for (int mu = 0; mu <= N; ++mu) d[mu] = -eval_coeff(v.xi[mu], X, 0.0, N);
        return d;
    };
    std::vector<double> y =
        numerics::flow_integrate(back, std::vector<double>(probe.begin(), probe.end()), epsilon,
                                 steps);
    double u0 = f(y);

    // forward characteristic flow of (x, u)
    numerics::OdeRhs fwd = [&](const std::vector<double>& S) {
        std::vector<double> d(N + 2);
        std::span<const double> xs(S.data(), N + 1);
        for (int mu = 0; mu <= N; ++mu) d[mu] = eval_coeff(v.xi[mu], xs, S[N + 1], N);
        d[N + 1] = eval_coeff(v.eta, xs, S[N + 1], N);
        return d;
    };
    std::vector<double> s0 = y;
    s0.push_back(u0);
    std::vector<double> s1 = numerics::flow_integrate(fwd, std::move(s0), epsilon, steps);
    return s1[N + 1];
}

numerics::ScalarField flow_transform_field(const VectorField& v, const numerics::ScalarField& f,
                                           double epsilon, int steps) {
    if (v.xi_depends_on_u())
        throw LieError("flow transport requires xi independent of u");
    int N = v.n;
    numerics::ScalarField g;
    g.dim = N + 1;
    g.eval = [v, f, epsilon, steps](std::span<const double> x) {
        return flow_transform(v, f, epsilon, x, steps);
    };
    g.singular = [v, f, epsilon, steps, N](std::span<const double> x) {
        if (!f.singular) return false;
        numerics::OdeRhs back = [&](const std::vector<double>& X) {
            std::vector<double> d(N + 1);
            for (int mu = 0; mu <= N; ++mu) d[mu] = -eval_coeff(v.xi[mu], X, 0.0, N);
            return d;
        };
        try {
            std::vector<double> y = numerics::flow_integrate(
                back, std::vector<double>(x.begin(), x.end()), epsilon, steps);
            return f.singular(y);
        } catch (const std::exception&) {
            return true;
        }
    };
    return g;
}

} // namespace condsym::lie
