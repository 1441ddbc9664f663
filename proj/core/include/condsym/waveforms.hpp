#pragma once

#include <optional>
#include <string>
#include <vector>

#include "condsym/expr.hpp"
#include "condsym/lie.hpp"

namespace condsym::waveforms {

struct WaveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Nonlinearity of the wave equation Box u = F. The special families carry a
// note recording their known extra symmetry; only the zero / opaque / general
// cases participate in reductions.
struct Nonlinearity {
    enum class Type { Zero, PowerLaw, Exponential, Conformal, General, Opaque };
    Type type = Type::Zero;
    Expr expr;        // the F expression in jet variables (invalid for Zero)
    std::string note; // extra-symmetry metadata

    bool is_zero() const { return type == Type::Zero; }
};

Nonlinearity F_zero();
Nonlinearity F_power(const Expr& lambda, const Rational& k); // lambda * u^k
Nonlinearity F_exponential(const Expr& lambda);              // lambda * e^u
Nonlinearity F_conformal(const Expr& lambda, int n);         // lambda * u^{(n+3)/(n-1)}
Nonlinearity F_general(const Expr& f_of_x2_u);               // general F(x^2, u)
Nonlinearity F_opaque();                                     // opaque unary F(u)

// x_nu x_nu = x0^2 - x1^2 - ... - xn^2
Expr minkowski_sq(int n);

// PDESystem for Box u = F with the printed signature -d00 + sum_a daa (or the
// flipped one); u_{00} is the solved leading jet. Requires n >= 2.
lie::PDESystem build_wave(int n, const Nonlinearity& F = F_zero(), bool paper_signature = true);

// The two additional conditions, contracted Euclideanly (x_mu d_mu is the
// homogeneity Euler operator).
struct Condition {
    enum class Kind { Add1, Add2 };
    Kind kind = Kind::Add1;
    int n = 3;
    Expr alpha;

    Expr residual() const;
    std::string label() const;
};
Condition make_add1(int n, const Expr& alpha);
Condition make_add2(int n, const Expr& alpha);

// Joint system {wave, condition} with triangular solved stages and the fixed
// consequence list (first derivatives of first-order conditions).
lie::PDESystem with_condition(const lie::PDESystem& wave, const Condition& c);

// Generators ----------------------------------------------------------------

// dilation D = x_mu d_mu + alpha u d_u (real form of the printed operator)
lie::VectorField op_D(int n, const Expr& alpha);

// op1: X = (-(1/alpha) u^{1/alpha} x_mu I(u) + C_{mu nu} x_nu + d x_mu) d_mu
//        + Phi d_u, with I(u) = int Phi_u u^{1/alpha - 1} du computed per
// monomial Phi = sum c * u^p * prod theta_mu^{k_mu}, theta_mu = u^{1/alpha} x_mu.
struct Op1Monomial {
    Rational coeff;
    Rational p;
    std::vector<Rational> theta_pows; // size n+1, exponents on theta_mu
};
struct Op1Spec {
    int n = 3;
    Expr alpha; // nonzero
    std::vector<Op1Monomial> phi;
    std::vector<std::vector<Rational>> C; // (n+1)x(n+1), arbitrary rational
    Rational d{0};
    std::optional<Expr> antiderivative; // overrides the monomial integration
};
// I(u) in the (u, theta) variables, before theta substitution.
Expr op1_antiderivative(const Op1Spec& spec);
Expr op1_phi(const Op1Spec& spec);         // Phi in (u, theta) variables
Expr op1_phi_u(const Op1Spec& spec);       // dPhi/du at fixed theta
lie::VectorField op_op1(const Op1Spec& spec);

// op2: X = x0 phi^mu(x_a/x0, u) d_mu + psi(x_a/x0, u) d_u; phi/psi are given
// as expressions in w1..wn and u.
struct Op2Spec {
    int n = 3;
    std::vector<Expr> phi; // size n+1
    Expr psi;
};
lie::VectorField op_op2(const Op2Spec& spec);

std::vector<lie::VectorField> poincare_generators(int n);
lie::VectorField translation_p(int n, int mu);       // p_mu, real form g_{mu mu} d_mu
lie::VectorField lorentz_j(int n, int mu, int nu);   // J_{mu nu}
lie::VectorField euler_field(int n);                 // x_mu d_mu
lie::VectorField u_scaling(int n);                   // u d_u
lie::VectorField plain_translation(int n, int mu);   // d_mu
lie::VectorField axis_scaling(int n, int a);         // x_a d_a (deliberate breaker)
// dilation generators for the special nonlinearities (spot checks)
lie::VectorField dilation_for_power(int n, const Rational& k);
lie::VectorField dilation_for_exponential(int n);

// Fixtures ------------------------------------------------------------------

// Verbatim transcriptions of the printed formulas. Fixtures are immutable
// reference data: derivations are compared against them, never built from
// them.
struct PaperFixture {
    std::string id;
    std::string kind; // "reduced-pde" | "ode" | "solution" | "ansatz"
    std::vector<Expr> statements;
    std::string note;
};

PaperFixture paper_fixture(const std::string& id, int n = 3,
                           std::optional<Expr> alpha = std::nullopt);
std::vector<std::string> fixture_ids();

} // namespace condsym::waveforms
