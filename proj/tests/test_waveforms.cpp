#include <doctest.h>

#include <cmath>

#include "condsym/calculus.hpp"
#include "condsym/lie.hpp"
#include "condsym/normal.hpp"
#include "condsym/parser.hpp"
#include "condsym/waveforms.hpp"

using namespace condsym;
using namespace condsym::waveforms;

TEST_CASE("wave equation builder") {
    lie::PDESystem w3 = build_wave(3);
    CHECK(equal_modulo_normal(w3.equations[0],
                              parse("-1*D[u,0,0] + D[u,1,1] + D[u,2,2] + D[u,3,3]")));
    lie::PDESystem w2 = build_wave(2, F_exponential(ex::symbol(sym::lambda())));
    CHECK(equal_modulo_normal(w2.equations[0],
                              parse("-1*D[u,0,0] + D[u,1,1] + D[u,2,2] - lambda*exp(u)")));
    CHECK_THROWS_AS(build_wave(1), WaveError);
    // flipped signature negates the residual
    lie::PDESystem flipped = build_wave(2, F_zero(), false);
    CHECK(is_zero_expr(ex::add(flipped.equations[0], build_wave(2).equations[0])));
}

TEST_CASE("conditions and their solved forms") {
    // alpha = 0: pure Euler contraction
    Condition c0 = make_add1(3, ex::rat(0));
    CHECK(equal_modulo_normal(c0.residual(),
                              parse("x0*D[u,0] + x1*D[u,1] + x2*D[u,2] + x3*D[u,3]")));
    Condition c2 = make_add2(3, ex::rat(1));
    // spot-check one cross term and the alpha part
    CHECK(mentions_symbol(c2.residual(), sym::u()));

    // solved forms substitute back to normalize-zero on every stage
    for (auto cond : {make_add1(3, ex::symbol(sym::alpha())), make_add2(3, ex::rat(1))}) {
        lie::PDESystem sys = with_condition(build_wave(3), cond);
        for (const auto& eq : sys.equations) {
            auto closed = lie::apply_solved_stages(sys, eq);
            REQUIRE(closed.has_value());
            CHECK(is_zero_expr(*closed));
        }
        for (const auto& eq : sys.consequences) {
            auto closed = lie::apply_solved_stages(sys, eq);
            REQUIRE(closed.has_value());
            CHECK(is_zero_expr(*closed));
        }
    }
}

TEST_CASE("dilation operator") {
    lie::VectorField e0 = op_D(3, ex::rat(0));
    for (int mu = 0; mu <= 3; ++mu) CHECK(struct_eq(e0.xi[mu], ex::x(mu)));
    CHECK(is_zero_expr(e0.eta));

    // degree-2 homogeneity: D u = 0 for u = x0^2 phi(x_a/x0) at alpha = -2
    std::vector<Expr> args{parse("x1/x0"), parse("x2/x0"), parse("x3/x0")};
    Expr u = ex::mul(parse("x0^2"), ex::app(sym::phi(), {}, args));
    Expr Du = ex::mul(ex::rat(-2), u);
    for (int mu = 0; mu <= 3; ++mu)
        Du = ex::add(Du, ex::mul(ex::x(mu), differentiate(u, sym::coord(mu))));
    CHECK(is_zero_expr(Du));
}

TEST_CASE("op1 antiderivative machinery") {
    // Phi = 0: pure linear vector field
    {
        Op1Spec spec;
        spec.n = 2;
        spec.alpha = ex::rat(1);
        spec.C.assign(3, std::vector<Rational>(3, Rational(0)));
        spec.C[0][2] = Rational(3);
        spec.d = Rational(1, 2);
        lie::VectorField v = op_op1(spec);
        CHECK(equal_modulo_normal(v.xi[0], parse("3*x2 + 1/2*x0")));
        CHECK(equal_modulo_normal(v.xi[1], parse("1/2*x1")));
        CHECK(is_zero_expr(v.eta));
    }
    // Phi = u, alpha = 1: I(u) = u
    {
        Op1Spec spec;
        spec.n = 2;
        spec.alpha = ex::rat(1);
        spec.phi = {Op1Monomial{Rational(1), Rational(1), {}}};
        CHECK(equal_modulo_normal(op1_antiderivative(spec), parse("u")));
        lie::VectorField v = op_op1(spec);
        CHECK(equal_modulo_normal(v.eta, parse("u")));
        CHECK(equal_modulo_normal(v.xi[1], parse("-1*x1*u^2")));
    }
    // Phi = theta0 * u with alpha = 2: power rule gives 2 theta0 sqrt(u)
    {
        Op1Spec spec;
        spec.n = 2;
        spec.alpha = ex::rat(2);
        spec.phi = {Op1Monomial{Rational(1), Rational(1), {Rational(1)}}};
        Expr I = op1_antiderivative(spec);
        CHECK(equal_modulo_normal(
            I, ex::prod({ex::rat(2), ex::symbol(sym::theta(0)), ex::pow(ex::u(), ex::rat(1, 2))})));
    }
    // logarithmic monomial is rejected: p + 1/alpha - 1 = 0
    {
        Op1Spec spec;
        spec.n = 2;
        spec.alpha = ex::rat(-1, 2);
        spec.phi = {Op1Monomial{Rational(1), Rational(3), {}}};
        CHECK_THROWS_AS(op1_antiderivative(spec), WaveError);
    }
    CHECK_THROWS_AS(op_op1(Op1Spec{2, ex::rat(0), {}, {}, Rational(0), {}}), WaveError);
}

TEST_CASE("op1 antiderivative differentiates back to Phi_u u^(1/alpha - 1)") {
    std::vector<Op1Spec> specs;
    {
        Op1Spec s;
        s.n = 2;
        s.alpha = ex::rat(1);
        s.phi = {Op1Monomial{Rational(1), Rational(1), {}},
                 Op1Monomial{Rational(2, 3), Rational(2), {Rational(1), Rational(1)}}};
        specs.push_back(s);
    }
    {
        Op1Spec s;
        s.n = 2;
        s.alpha = ex::rat(2);
        s.phi = {Op1Monomial{Rational(5), Rational(3), {Rational(0), Rational(2)}}};
        specs.push_back(s);
    }
    {
        Op1Spec s; // symbolic alpha
        s.n = 2;
        s.alpha = ex::symbol(sym::alpha());
        s.phi = {Op1Monomial{Rational(1), Rational(2), {}}};
        specs.push_back(s);
    }
    for (const auto& s : specs) {
        Expr I = op1_antiderivative(s);
        Expr dI = differentiate(I, sym::u());
        Expr expected = ex::mul(op1_phi_u(s),
                                ex::pow(ex::u(), ex::sub(ex::pow(s.alpha, ex::rat(-1)),
                                                         ex::rat(1))));
        CHECK(is_zero_expr(ex::sub(dI, expected)));
    }
}

TEST_CASE("op2 trivial instances reproduce classical generators") {
    int n = 3;
    {
        Op2Spec spec;
        spec.n = n;
        spec.phi.push_back(ex::rat(1));
        for (int a = 1; a <= n; ++a) spec.phi.push_back(ex::w(a));
        spec.psi = ex::rat(0);
        lie::VectorField v = op_op2(spec);
        lie::VectorField e = euler_field(n);
        for (int mu = 0; mu <= n; ++mu) CHECK(is_zero_expr(ex::sub(v.xi[mu], e.xi[mu])));
    }
    {
        Op2Spec spec;
        spec.n = n;
        for (int mu = 0; mu <= n; ++mu) spec.phi.push_back(ex::rat(0));
        spec.psi = ex::u();
        lie::VectorField v = op_op2(spec);
        CHECK(equal_modulo_normal(v.eta, ex::u()));
        for (int mu = 0; mu <= n; ++mu) CHECK(is_zero_expr(v.xi[mu]));
    }
    {
        Op2Spec spec;
        spec.n = n;
        for (int mu = 0; mu <= n; ++mu) spec.phi.push_back(ex::rat(0));
        spec.phi[2] = ex::w(1);
        spec.phi[1] = ex::neg(ex::w(2));
        spec.psi = ex::rat(0);
        lie::VectorField v = op_op2(spec);
        CHECK(equal_modulo_normal(v.xi[2], ex::x(1)));
        CHECK(equal_modulo_normal(v.xi[1], ex::neg(ex::x(2))));
    }
    // raw coordinates in the component functions are rejected
    Op2Spec bad;
    bad.n = n;
    for (int mu = 0; mu <= n; ++mu) bad.phi.push_back(ex::rat(0));
    bad.psi = ex::x(1);
    CHECK_THROWS_AS(op_op2(bad), WaveError);
}

TEST_CASE("poincare generators: counts and invariance") {
    CHECK(poincare_generators(2).size() == 6);  // 3 translations + 3 rotations/boosts
    CHECK(poincare_generators(3).size() == 10); // 4 + 6
    lie::PDESystem wf = build_wave(2, F_opaque());
    for (const auto& g : poincare_generators(2))
        CHECK(lie::check_invariance_symbolic(wf, g).invariant());
}

TEST_CASE("spot checks: extra dilations of the special nonlinearities") {
    // F = lambda u^3: x_mu d_mu - u d_u
    lie::PDESystem cubic = build_wave(3, F_power(ex::symbol(sym::lambda()), Rational(3)));
    CHECK(lie::check_invariance_symbolic(cubic, dilation_for_power(3, Rational(3))).invariant());
    // F = lambda e^u with n = 2: x_mu d_mu - 2 d_u
    lie::PDESystem liouville = build_wave(2, F_exponential(ex::symbol(sym::lambda())));
    CHECK(lie::check_invariance_symbolic(liouville, dilation_for_exponential(2)).invariant());
    // and the wrong dilation fails
    CHECK(lie::check_invariance_symbolic(cubic, dilation_for_power(3, Rational(2))).status ==
          lie::Invariance::NotInvariant);
}

TEST_CASE("fixtures transcribe the printed formulas") {
    auto fx = paper_fixture("reduced2", 3);
    CHECK(equal_modulo_normal(
        fx.statements[0],
        parse("(1+2*alpha)*w*D[phi,1] + (w^2-1)*D[phi,1,1] + alpha*(alpha+1)*phi")));

    auto a0 = paper_fixture("sol-a0", 3);
    CHECK(equal_modulo_normal(a0.statements[0],
                              parse("c1*ln(abs(w+sqrt(w^2-1))) + c2")));

    // red3 phi-solution at w = 3 evaluates to c1 ln(1/2)
    auto r3 = paper_fixture("sol-red3", 3);
    Assignment a;
    a.vars[sym::radial()] = 3.0;
    a.vars[sym::c(1)] = 1.0;
    CHECK(eval_numeric(r3.statements[0], a) == doctest::Approx(std::log(0.5)));

    // the printed radial integrand carries the doubtful exponent -n/2-1
    auto rad = paper_fixture("radial", 3);
    REQUIRE(rad.statements[0].kind() == Kind::Integral);
    Expr integrand = rad.statements[0].kids()[0];
    Subst s;
    s.atoms[ex::symbol(sym::nparam())] = ex::rat(3);
    Expr at3 = substitute(integrand, s);
    CHECK(equal_modulo_normal(at3, parse("w^(-3/2)*(w-1)^(-5/2)")));

    CHECK(fixture_ids().size() == 12);
    CHECK_THROWS_AS(paper_fixture("nope", 3), WaveError);
}

TEST_CASE("anz2 fixture branches on alpha = 1") {
    auto generic = paper_fixture("anz2", 2, ex::symbol(sym::alpha()));
    CHECK(mentions_symbol(generic.statements[0], sym::alpha()));
    auto at1 = paper_fixture("anz2", 2, ex::rat(1));
    // alpha = 1 branch multiplies phi by ln x0
    CHECK(contains_subexpr(at1.statements[0], ex::ln(ex::x(0))));
}
