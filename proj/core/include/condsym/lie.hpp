#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "condsym/eval.hpp"
#include "condsym/expr.hpp"
#include "condsym/numerics.hpp"

namespace condsym::lie {

struct LieError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// First-order generator xi^mu d_mu + eta d_u; coefficients are expressions
// in the coordinates and u.
struct VectorField {
    int n = 3;
    std::vector<Expr> xi; // size n+1
    Expr eta;
    std::string name;

    bool xi_depends_on_u() const;
};

// Second prolongation: coefficients on d/du_mu and d/du_{mu nu} in jet
// variables.
struct ProlongedField {
    VectorField base;
    std::vector<Expr> eta1;
    std::vector<std::vector<Expr>> eta2; // symmetric
};

struct SolvedForm {
    Expr jet; // a jet atom: u, D[u,i] or D[u,i,j]
    Expr rhs;
};

// Equations in jet coordinates together with the triangular substitution
// stages that define the solution manifold, the fixed list of differential
// consequences (first derivatives of first-order conditions), and the jets
// the numeric sampler solves for.
struct PDESystem {
    int n = 3;
    std::string id;
    std::vector<Expr> equations;
    std::vector<Expr> consequences;
    std::vector<std::vector<SolvedForm>> stages;
    std::vector<Expr> leading;
};

enum class Invariance { Invariant, NotInvariant, Inconclusive };

struct Verdict {
    Invariance status = Invariance::Inconclusive;
    std::string mode;                 // "symbolic" | "numeric"
    std::vector<std::string> residuals; // nonzero residuals (rendered), symbolic mode
    std::string note;
    double max_residual = 0;
    std::vector<double> argmax_x;
    int samples = 0;
    std::uint64_t seed = 0;
    double tolerance = 0;

    bool invariant() const { return status == Invariance::Invariant; }
};

struct Region {
    std::vector<std::pair<double, double>> coord;
    std::pair<double, double> jet{-1.0, 1.0};

    static Region defaults(int n);
};

// Deterministic splitmix64-based uniform generator; results do not depend on
// the platform or the standard library.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next();
    double next01();
    double uniform(double lo, double hi) { return lo + (hi - lo) * next01(); }

private:
    std::uint64_t s_;
};

ProlongedField prolong2(const VectorField& v);

// Action of the prolonged field on an equation of jet order <= 2.
Expr apply_prolonged(const ProlongedField& p, const Expr& eq);

// Commutator of two point-transformation generators.
VectorField bracket(const VectorField& a, const VectorField& b);

// Substitutes the system's solved stages into e until the staged jets are
// gone; nullopt when the substitution does not close.
std::optional<Expr> apply_solved_stages(const PDESystem& sys, const Expr& e);

Verdict check_invariance_symbolic(const PDESystem& sys, const VectorField& v);

Verdict check_invariance_numeric(const PDESystem& sys, const VectorField& v,
                                 const std::map<Sym, double>& params, int samples,
                                 std::uint64_t seed, double tol, const Region& region);

// On-manifold jet point: free components drawn from the region, leading jets
// solved from the equations and consequences (all linear in the jets).
JetVals sample_on_manifold(const PDESystem& sys, const Region& region, std::uint64_t seed,
                           const std::map<Sym, double>& params);

// Value at `probe` of the function obtained by transporting f along the flow
// of v for parameter epsilon. Requires xi independent of u.
double flow_transform(const VectorField& v, const numerics::ScalarField& f, double epsilon,
                      std::span<const double> probe, int steps = 200);

// The transported function as a field (integrates per evaluation).
numerics::ScalarField flow_transform_field(const VectorField& v, const numerics::ScalarField& f,
                                           double epsilon, int steps = 200);

} // namespace condsym::lie
