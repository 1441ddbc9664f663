#include "condsym/waveforms.hpp"

#include <algorithm>

#include "condsym/normal.hpp"

namespace condsym::waveforms {

namespace {

std::uint8_t u8(int v) { return static_cast<std::uint8_t>(v); }

Expr alpha_e() { return ex::symbol(sym::alpha()); }
Expr n_e() { return ex::symbol(sym::nparam()); }

// Solves a jet-linear expression for one jet variable: expr == 0 gives
// jet = -rest/coefficient. The coefficient must be jet-free.
Expr solve_linear_jet(const Expr& expr, const Expr& jet) {
    Expr k = diff_atom(expr, jet);
    if (k.is_zero() || contains_subexpr(k, jet))
        throw WaveError("cannot solve for " + format(jet) + " in " + format(expr));
    Subst zero;
    zero.atoms[jet] = ex::rat(0);
    Expr rest = substitute(expr, zero);
    return render(nx_mul(nx_neg(normalize(rest)), nx_inv(normalize(k))));
}

} // namespace

Nonlinearity F_zero() { return {}; }

Nonlinearity F_power(const Expr& lambda, const Rational& k) {
    Nonlinearity f;
    f.type = Nonlinearity::Type::PowerLaw;
    f.expr = ex::mul(lambda, ex::pow(ex::u(), ex::rat(k)));
    f.note = "F = lambda*u^k admits the extra dilation x_mu d_mu + (2/(1-k)) u d_u";
    return f;
}

Nonlinearity F_exponential(const Expr& lambda) {
    Nonlinearity f;
    f.type = Nonlinearity::Type::Exponential;
    f.expr = ex::mul(lambda, ex::exp(ex::u()));
    f.note = "F = lambda*exp(u) admits the extra dilation x_mu d_mu - 2 d_u";
    return f;
}

Nonlinearity F_conformal(const Expr& lambda, int n) {
    Nonlinearity f;
    f.type = Nonlinearity::Type::Conformal;
    Expr expo = n > 1 ? ex::rat(Rational(n + 3, n - 1))
                      : ex::div(ex::add(n_e(), ex::rat(3)), ex::sub(n_e(), ex::rat(1)));
    f.expr = ex::mul(lambda, ex::pow(ex::u(), expo));
    f.note = "F = lambda*u^((n+3)/(n-1)) admits conformal operators (not constructed here)";
    return f;
}

Nonlinearity F_general(const Expr& f_of_x2_u) {
    Nonlinearity f;
    f.type = Nonlinearity::Type::General;
    f.expr = f_of_x2_u;
    f.note = "F = F(x^2, u): invariance algebra reduces to the Lorentz generators";
    return f;
}

Nonlinearity F_opaque() {
    Nonlinearity f;
    f.type = Nonlinearity::Type::Opaque;
    f.expr = ex::app(sym::bigF(), {}, {ex::u()});
    return f;
}

Expr minkowski_sq(int n) {
    std::vector<Expr> terms;
    terms.push_back(ex::pow(ex::x(0), ex::rat(2)));
    for (int a = 1; a <= n; ++a) terms.push_back(ex::neg(ex::pow(ex::x(a), ex::rat(2))));
    return ex::sum(std::move(terms));
}

lie::PDESystem build_wave(int n, const Nonlinearity& F, bool paper_signature) {
    if (n < 2) throw WaveError("n = 1 is excluded (n must be at least 2)");
    std::vector<Expr> terms;
    Expr u00 = ex::ujet({0, 0});
    terms.push_back(ex::neg(u00));
    for (int a = 1; a <= n; ++a) terms.push_back(ex::ujet({u8(a), u8(a)}));
    if (!F.is_zero()) terms.push_back(ex::neg(F.expr));
    Expr residual = ex::sum(std::move(terms));
    if (!paper_signature) residual = ex::neg(residual);

    lie::PDESystem sys;
    sys.n = n;
    sys.id = "wave(n=" + std::to_string(n) + (F.is_zero() ? "" : ", F") + ")";
    sys.equations = {residual};
    sys.stages = {{{u00, solve_linear_jet(residual, u00)}}};
    sys.leading = {u00};
    return sys;
}

// ---------------------------------------------------------------------------

Expr Condition::residual() const {
    std::vector<Expr> terms;
    if (kind == Kind::Add1) {
        for (int mu = 0; mu <= n; ++mu)
            terms.push_back(ex::mul(ex::x(mu), ex::ujet({u8(mu)})));
        terms.push_back(ex::mul(alpha, ex::u()));
    } else {
        for (int mu = 0; mu <= n; ++mu)
            for (int nu = 0; nu <= n; ++nu)
                terms.push_back(ex::prod({ex::x(mu), ex::x(nu),
                                          ex::ujet({u8(std::min(mu, nu)), u8(std::max(mu, nu))})}));
        for (int mu = 0; mu <= n; ++mu)
            terms.push_back(ex::prod({alpha, ex::x(mu), ex::ujet({u8(mu)})}));
    }
    return ex::sum(std::move(terms));
}

std::string Condition::label() const {
    return std::string(kind == Kind::Add1 ? "add1" : "add2") + "(alpha=" + format(alpha) + ")";
}

Condition make_add1(int n, const Expr& alpha) { return {Condition::Kind::Add1, n, alpha}; }
Condition make_add2(int n, const Expr& alpha) { return {Condition::Kind::Add2, n, alpha}; }

lie::PDESystem with_condition(const lie::PDESystem& wave, const Condition& c) {
    if (wave.n != c.n) throw WaveError("condition dimension does not match the wave equation");
    int n = wave.n;
    lie::PDESystem sys = wave;
    sys.id = wave.id + "+" + c.label();
    Expr cond = c.residual();
    sys.equations.push_back(cond);

    if (c.kind == Condition::Kind::Add1) {
        // first stage: u00 from the wave equation, u0 from the condition,
        // u_{0a} from its spatial derivatives
        auto stage0 = sys.stages[0];
        Expr u0 = ex::ujet({0});
        stage0.push_back({u0, solve_linear_jet(cond, u0)});
        std::vector<Expr> cons;
        for (int nu = 0; nu <= n; ++nu)
            cons.push_back(differentiate(cond, sym::coord(nu)));
        for (int a = 1; a <= n; ++a) {
            Expr u0a = ex::ujet({0, u8(a)});
            stage0.push_back({u0a, solve_linear_jet(cons[a], u0a)});
        }
        sys.stages = {stage0};
        // the time derivative of the condition closes on u_{12} after the
        // first stage is substituted in
        Expr c0 = cons[0];
        {
            Subst s;
            for (const auto& sf : stage0) s.atoms[sf.jet] = sf.rhs;
            c0 = substitute(c0, s);
            c0 = substitute(c0, s); // u_{0a} forms feed the u00 consequence
        }
        Expr u12 = ex::ujet({1, 2});
        sys.stages.push_back({{u12, solve_linear_jet(c0, u12)}});
        sys.consequences = cons;
        sys.leading = {ex::ujet({0, 0}), ex::ujet({0})};
        for (int a = 1; a <= n; ++a) sys.leading.push_back(ex::ujet({0, u8(a)}));
        sys.leading.push_back(u12);
    } else {
        // add2 is second order: solve it for u_{01} once u00 is known
        Expr reduced = cond;
        {
            Subst s;
            for (const auto& sf : sys.stages[0]) s.atoms[sf.jet] = sf.rhs;
            reduced = substitute(reduced, s);
        }
        Expr u01 = ex::ujet({0, 1});
        sys.stages.push_back({{u01, solve_linear_jet(reduced, u01)}});
        sys.leading = {ex::ujet({0, 0}), u01};
    }
    return sys;
}

// ---------------------------------------------------------------------------
// generators

lie::VectorField op_D(int n, const Expr& alpha) {
    lie::VectorField v;
    v.n = n;
    v.name = "D(alpha=" + format(alpha) + ")";
    for (int mu = 0; mu <= n; ++mu) v.xi.push_back(ex::x(mu));
    v.eta = ex::mul(alpha, ex::u());
    return v;
}

Expr op1_phi(const Op1Spec& spec) {
    std::vector<Expr> terms;
    for (const auto& m : spec.phi) {
        std::vector<Expr> fs;
        fs.push_back(ex::rat(m.coeff));
        if (!m.p.is_zero()) fs.push_back(ex::pow(ex::u(), ex::rat(m.p)));
        for (int mu = 0; mu <= spec.n; ++mu) {
            if (static_cast<std::size_t>(mu) < m.theta_pows.size() && !m.theta_pows[mu].is_zero())
                fs.push_back(ex::pow(ex::symbol(sym::theta(mu)), ex::rat(m.theta_pows[mu])));
        }
        terms.push_back(ex::prod(std::move(fs)));
    }
    return ex::sum(std::move(terms));
}

Expr op1_phi_u(const Op1Spec& spec) {
    std::vector<Expr> terms;
    for (const auto& m : spec.phi) {
        if (m.p.is_zero()) continue;
        std::vector<Expr> fs;
        fs.push_back(ex::rat(m.coeff * m.p));
        fs.push_back(ex::pow(ex::u(), ex::rat(m.p - Rational(1))));
        for (int mu = 0; mu <= spec.n; ++mu)
            if (static_cast<std::size_t>(mu) < m.theta_pows.size() && !m.theta_pows[mu].is_zero())
                fs.push_back(ex::pow(ex::symbol(sym::theta(mu)), ex::rat(m.theta_pows[mu])));
        terms.push_back(ex::prod(std::move(fs)));
    }
    return ex::sum(std::move(terms));
}

Expr op1_antiderivative(const Op1Spec& spec) {
    if (spec.antiderivative) return *spec.antiderivative;
    Expr inv_alpha = ex::pow(spec.alpha, ex::rat(-1));
    std::optional<Rational> alpha_rat;
    if (spec.alpha.is_rat()) alpha_rat = spec.alpha.rat();
    if (alpha_rat && alpha_rat->is_zero()) throw WaveError("op1 requires alpha != 0");

    std::vector<Expr> terms;
    for (const auto& m : spec.phi) {
        if (m.p.is_zero()) continue; // Phi_u kills constant monomials
        // integrand: coeff*p * u^{p-1} * u^{1/alpha - 1} -> exponent p + 1/alpha - 2
        // antiderivative exponent: p + 1/alpha - 1, divisor the same
        if (alpha_rat) {
            Rational div = m.p + Rational(1) / *alpha_rat - Rational(1);
            if (div.is_zero())
                throw WaveError(
                    "op1 monomial integrates to a logarithm (p + 1/alpha - 1 = 0); supply an "
                    "explicit antiderivative");
            std::vector<Expr> fs;
            fs.push_back(ex::rat(m.coeff * m.p / div));
            fs.push_back(ex::pow(ex::u(), ex::rat(div)));
            for (int mu = 0; mu <= spec.n; ++mu)
                if (static_cast<std::size_t>(mu) < m.theta_pows.size() &&
                    !m.theta_pows[mu].is_zero())
                    fs.push_back(ex::pow(ex::symbol(sym::theta(mu)), ex::rat(m.theta_pows[mu])));
            terms.push_back(ex::prod(std::move(fs)));
        } else {
            Expr div = ex::add(ex::rat(m.p - Rational(1)), inv_alpha);
            std::vector<Expr> fs;
            fs.push_back(ex::rat(m.coeff * m.p));
            fs.push_back(ex::pow(div, ex::rat(-1)));
            fs.push_back(ex::pow(ex::u(), div));
            for (int mu = 0; mu <= spec.n; ++mu)
                if (static_cast<std::size_t>(mu) < m.theta_pows.size() &&
                    !m.theta_pows[mu].is_zero())
                    fs.push_back(ex::pow(ex::symbol(sym::theta(mu)), ex::rat(m.theta_pows[mu])));
            terms.push_back(ex::prod(std::move(fs)));
        }
    }
    return ex::sum(std::move(terms));
}

lie::VectorField op_op1(const Op1Spec& spec) {
    if (spec.alpha.is_rat() && spec.alpha.rat().is_zero())
        throw WaveError("op1 requires alpha != 0");
    if (!spec.C.empty() && (spec.C.size() != static_cast<std::size_t>(spec.n + 1) ||
                            spec.C[0].size() != static_cast<std::size_t>(spec.n + 1)))
        throw WaveError("op1 C matrix must be (n+1)x(n+1)");

    Expr I = op1_antiderivative(spec);
    Expr u_pow = ex::pow(ex::u(), ex::pow(spec.alpha, ex::rat(-1)));
    Subst theta_sub;
    for (int mu = 0; mu <= spec.n; ++mu)
        theta_sub.atoms[ex::symbol(sym::theta(mu))] = ex::mul(u_pow, ex::x(mu));

    Expr I_sub = substitute(I, theta_sub);
    Expr phi_sub = substitute(op1_phi(spec), theta_sub);

    lie::VectorField v;
    v.n = spec.n;
    v.name = "op1";
    for (int mu = 0; mu <= spec.n; ++mu) {
        std::vector<Expr> terms;
        terms.push_back(ex::neg(ex::prod(
            {ex::pow(spec.alpha, ex::rat(-1)), u_pow, ex::x(mu), I_sub})));
        if (!spec.C.empty())
            for (int nu = 0; nu <= spec.n; ++nu)
                if (!spec.C[mu][nu].is_zero())
                    terms.push_back(ex::mul(ex::rat(spec.C[mu][nu]), ex::x(nu)));
        if (!spec.d.is_zero()) terms.push_back(ex::mul(ex::rat(spec.d), ex::x(mu)));
        v.xi.push_back(ex::sum(std::move(terms)));
    }
    v.eta = phi_sub;
    return v;
}

lie::VectorField op_op2(const Op2Spec& spec) {
    if (spec.phi.size() != static_cast<std::size_t>(spec.n + 1))
        throw WaveError("op2 needs n+1 phi components");
    auto check_args = [&](const Expr& e, const char* what) {
        std::vector<Sym> syms;
        collect_symbols(e, syms);
        for (Sym s : syms) {
            SymKind k = SymTab::instance().kind(s);
            if (k == SymKind::Coordinate)
                throw WaveError(std::string(what) + " must depend on w_a = x_a/x0 and u, not raw x");
            if (k == SymKind::Invariant && SymTab::instance().index(s) > spec.n)
                throw WaveError(std::string(what) + " references an invariant beyond n");
        }
    };
    Subst omega;
    for (int a = 1; a <= spec.n; ++a)
        omega.atoms[ex::w(a)] = ex::div(ex::x(a), ex::x(0));

    lie::VectorField v;
    v.n = spec.n;
    v.name = "op2";
    for (int mu = 0; mu <= spec.n; ++mu) {
        check_args(spec.phi[mu], "op2 phi^mu");
        v.xi.push_back(ex::mul(ex::x(0), substitute(spec.phi[mu], omega)));
    }
    check_args(spec.psi, "op2 psi");
    v.eta = substitute(spec.psi, omega);
    return v;
}

lie::VectorField translation_p(int n, int mu) {
    lie::VectorField v;
    v.n = n;
    v.name = "P" + std::to_string(mu);
    for (int i = 0; i <= n; ++i) v.xi.push_back(ex::rat(0));
    v.xi[mu] = ex::rat(mu == 0 ? 1 : -1); // g_{mu mu} with the i dropped
    v.eta = ex::rat(0);
    return v;
}

lie::VectorField lorentz_j(int n, int mu, int nu) {
    if (mu == nu) throw WaveError("J indices must differ");
    lie::VectorField v;
    v.n = n;
    v.name = "J" + std::to_string(mu) + std::to_string(nu);
    for (int i = 0; i <= n; ++i) v.xi.push_back(ex::rat(0));
    // J_{mu nu} = x_mu p_nu - x_nu p_mu with p lowered by diag(1,-1,...,-1)
    Rational g_nu(nu == 0 ? 1 : -1), g_mu(mu == 0 ? 1 : -1);
    v.xi[nu] = ex::mul(ex::rat(g_nu), ex::x(mu));
    v.xi[mu] = ex::neg(ex::mul(ex::rat(g_mu), ex::x(nu)));
    v.eta = ex::rat(0);
    return v;
}

std::vector<lie::VectorField> poincare_generators(int n) {
    if (n < 2) throw WaveError("n must be at least 2");
    std::vector<lie::VectorField> out;
    for (int mu = 0; mu <= n; ++mu) out.push_back(translation_p(n, mu));
    for (int mu = 0; mu <= n; ++mu)
        for (int nu = mu + 1; nu <= n; ++nu) out.push_back(lorentz_j(n, mu, nu));
    return out;
}

lie::VectorField euler_field(int n) {
    lie::VectorField v;
    v.n = n;
    v.name = "E";
    for (int mu = 0; mu <= n; ++mu) v.xi.push_back(ex::x(mu));
    v.eta = ex::rat(0);
    return v;
}

lie::VectorField u_scaling(int n) {
    lie::VectorField v;
    v.n = n;
    v.name = "u*du";
    for (int mu = 0; mu <= n; ++mu) v.xi.push_back(ex::rat(0));
    v.eta = ex::u();
    return v;
}

lie::VectorField plain_translation(int n, int mu) {
    lie::VectorField v;
    v.n = n;
    v.name = "d" + std::to_string(mu);
    for (int i = 0; i <= n; ++i) v.xi.push_back(ex::rat(0));
    v.xi[mu] = ex::rat(1);
    v.eta = ex::rat(0);
    return v;
}

lie::VectorField axis_scaling(int n, int a) {
    lie::VectorField v;
    v.n = n;
    v.name = "x" + std::to_string(a) + "*d" + std::to_string(a);
    for (int i = 0; i <= n; ++i) v.xi.push_back(ex::rat(0));
    v.xi[a] = ex::x(a);
    v.eta = ex::rat(0);
    return v;
}

lie::VectorField dilation_for_power(int n, const Rational& k) {
    if (k == Rational(1)) throw WaveError("k = 1 has no dilation of this form");
    lie::VectorField v;
    v.n = n;
    v.name = "D_power";
    for (int mu = 0; mu <= n; ++mu) v.xi.push_back(ex::x(mu));
    v.eta = ex::mul(ex::rat(Rational(2) / (Rational(1) - k)), ex::u());
    return v;
}

lie::VectorField dilation_for_exponential(int n) {
    lie::VectorField v;
    v.n = n;
    v.name = "D_exp";
    for (int mu = 0; mu <= n; ++mu) v.xi.push_back(ex::x(mu));
    v.eta = ex::rat(-2);
    return v;
}

// ---------------------------------------------------------------------------
// fixtures

namespace {

Expr sqrt_w2m1() { return ex::sqrt(ex::sub(ex::pow(ex::wrad(), ex::rat(2)), ex::rat(1))); }
Expr ln_abs_arccosh() { return ex::ln(ex::abs(ex::add(ex::wrad(), sqrt_w2m1()))); }

Expr c(int i) { return ex::symbol(sym::c(i)); }

// sum_a coeff_a(w_a, markers) over a = 1..n for the printed index patterns
Expr contraction_terms(Sym f, int n, const Expr& coef_grad, const Expr& coef_hess,
                       const Expr& coef_lap, const Expr& coef_plain) {
    std::vector<Expr> terms;
    if (!coef_plain.is_zero()) terms.push_back(ex::mul(coef_plain, ex::fapp(f)));
    for (int a = 1; a <= n; ++a) {
        if (!coef_grad.is_zero())
            terms.push_back(ex::prod({coef_grad, ex::w(a), ex::fjet(f, {u8(a)})}));
        if (!coef_lap.is_zero())
            terms.push_back(ex::mul(coef_lap, ex::fjet(f, {u8(a), u8(a)})));
    }
    if (!coef_hess.is_zero())
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                terms.push_back(ex::prod({coef_hess, ex::w(a), ex::w(b),
                                          ex::fjet(f, {u8(std::min(a, b)), u8(std::max(a, b))})}));
    return ex::sum(std::move(terms));
}

} // namespace

std::vector<std::string> fixture_ids() {
    return {"reduced1", "reduced2", "sol-a0",   "sol-am1",  "radial",
            "anz1",     "anz2",     "reduced3", "reduced4", "sol-red3",
            "sol-red4", "add1-general-solution"};
}

PaperFixture paper_fixture(const std::string& id, int n, std::optional<Expr> alpha_opt) {
    Expr alpha = alpha_opt.value_or(alpha_e());
    PaperFixture fx;
    fx.id = id;

    if (id == "reduced1") {
        fx.kind = "reduced-pde";
        Expr coef_grad = ex::add(ex::rat(1), ex::mul(ex::rat(2), alpha));
        Expr coef_plain = ex::mul(alpha, ex::add(alpha, ex::rat(1)));
        fx.statements = {contraction_terms(sym::phi(), n, coef_grad, ex::rat(1), ex::rat(-1),
                                           coef_plain)};
        return fx;
    }
    if (id == "reduced2") {
        fx.kind = "ode";
        Expr w = ex::wrad();
        fx.statements = {ex::sum(
            {ex::prod({ex::add(ex::rat(1), ex::mul(ex::rat(2), alpha)), w,
                       ex::fjet(sym::phi(), {1})}),
             ex::mul(ex::sub(ex::pow(w, ex::rat(2)), ex::rat(1)), ex::fjet(sym::phi(), {1, 1})),
             ex::prod({alpha, ex::add(alpha, ex::rat(1)), ex::fapp(sym::phi())})})};
        return fx;
    }
    if (id == "sol-a0") {
        fx.kind = "solution";
        fx.statements = {ex::add(ex::mul(c(1), ln_abs_arccosh()), c(2))};
        fx.note = "solution of reduced2 printed for alpha = 0";
        return fx;
    }
    if (id == "sol-am1") {
        fx.kind = "solution";
        Expr w = ex::wrad();
        fx.statements = {ex::add(
            ex::mul(c(1), ex::sub(ex::prod({w, ex::rat(1, 2), sqrt_w2m1()}),
                                  ex::mul(ex::rat(1, 2), ln_abs_arccosh()))),
            c(2))};
        fx.note = "solution of reduced2 printed for alpha = -1";
        return fx;
    }
    if (id == "radial") {
        fx.kind = "solution";
        // phi = int w^{-n/2} (w-1)^{-n/2-1} dw as printed; the exponent on
        // (w-1) is the typographically doubtful one
        Expr w = ex::wrad();
        Expr nn = n > 0 ? ex::rat(n) : n_e();
        Expr mhalf_n = ex::mul(ex::rat(-1, 2), nn);
        Expr integrand = ex::mul(ex::pow(w, mhalf_n),
                                 ex::pow(ex::sub(w, ex::rat(1)), ex::sub(mhalf_n, ex::rat(1))));
        fx.statements = {ex::integral(integrand, Rational(2))};
        fx.note = "printed radial solution of reduced1 at alpha = 0, w = w_a w_a; the (w-1) "
                  "exponent as printed is -n/2-1";
        return fx;
    }
    if (id == "anz1" || id == "add1-general-solution") {
        fx.kind = "ansatz";
        std::vector<Expr> args;
        for (int a = 1; a <= n; ++a) args.push_back(ex::div(ex::x(a), ex::x(0)));
        fx.statements = {ex::mul(ex::pow(ex::x(0), alpha),
                                 ex::app(sym::phi(), {}, std::move(args)))};
        fx.note = "printed general solution of add1: u = x0^alpha phi(x_a/x0)";
        return fx;
    }
    if (id == "anz2") {
        fx.kind = "ansatz";
        std::vector<Expr> args;
        for (int a = 1; a <= n; ++a) args.push_back(ex::div(ex::x(a), ex::x(0)));
        bool alpha_is_one = alpha.is_rat() && alpha.rat() == Rational(1);
        Expr psi_part = alpha_is_one
                            ? ex::app(sym::psi(), {}, args)
                            : ex::mul(ex::pow(ex::x(0), ex::sub(ex::rat(1), alpha)),
                                      ex::app(sym::psi(), {}, args));
        Expr f_x0 = alpha_is_one ? ex::ln(ex::x(0)) : ex::rat(1);
        fx.statements = {ex::add(psi_part, ex::mul(ex::app(sym::phi(), {}, args), f_x0))};
        fx.note = "f(x0) = ln x0 for alpha = 1, else f(x0) = 1";
        return fx;
    }
    if (id == "reduced3") {
        fx.kind = "reduced-pde";
        fx.statements = {
            contraction_terms(sym::phi(), n, ex::rat(2), ex::rat(1), ex::rat(-1), ex::rat(0)),
            contraction_terms(sym::psi(), n, ex::mul(ex::rat(2), alpha), ex::rat(1), ex::rat(-1),
                              ex::rat(0))};
        fx.note = "printed antireduction system for alpha != 1";
        return fx;
    }
    if (id == "reduced4") {
        fx.kind = "reduced-pde";
        Expr phi_eq =
            contraction_terms(sym::phi(), n, ex::rat(2), ex::rat(1), ex::rat(-1), ex::rat(0));
        Expr psi_eq = ex::add(
            contraction_terms(sym::psi(), n, alpha, ex::rat(1), ex::rat(-1), ex::rat(0)),
            contraction_terms(sym::phi(), n, ex::rat(-2), ex::rat(0), ex::rat(0), ex::rat(-1)));
        fx.statements = {phi_eq, psi_eq};
        fx.note = "printed antireduction system for alpha = 1 (alpha kept symbolic as printed)";
        return fx;
    }
    if (id == "sol-red3") {
        fx.kind = "solution";
        Expr w = ex::wrad();
        Expr phi_sol = ex::mul(
            c(1), ex::ln(ex::div(ex::sub(w, ex::rat(1)), ex::add(w, ex::rat(1)))));
        Expr psi_sol = ex::mul(
            c(3), ex::integral(ex::pow(ex::sub(ex::pow(w, ex::rat(2)), ex::rat(1)),
                                       ex::neg(alpha)),
                               Rational(2)));
        fx.statements = {phi_sol, psi_sol};
        fx.note = "printed partial solutions of reduced3 with w = m_a w_a";
        return fx;
    }
    if (id == "sol-red4") {
        fx.kind = "solution";
        Expr w = ex::wrad();
        Expr s = sqrt_w2m1();
        Expr L = ln_abs_arccosh();
        Expr phi_sol = ex::mul(
            c(1), ex::ln(ex::div(ex::sub(w, ex::rat(1)), ex::add(w, ex::rat(1)))));
        Expr inner = ex::integral(ex::mul(ex::pow(sqrt_w2m1(), ex::rat(-1)), ln_abs_arccosh()),
                                  Rational(2));
        Expr psi_sol = ex::mul(
            ex::pow(s, ex::rat(-1)),
            ex::sum({ex::mul(c(2), L),
                     ex::neg(ex::prod({ex::rat(2), c(1), ex::pow(s, ex::rat(-1))})),
                     ex::mul(c(1), inner)}));
        fx.statements = {phi_sol, psi_sol};
        fx.note = "printed partial solutions of reduced4 (alpha = 1)";
        return fx;
    }
    throw WaveError("unknown fixture id '" + id + "'");
}

} // namespace condsym::waveforms
