#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace condsym::numerics {

struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scalar field on R^{n+1} with an explicit singular-set predicate. Querying
// inside the singular set is an error, never a silent NaN.
struct ScalarField {
    int dim = 0;
    std::function<double(std::span<const double>)> eval;
    std::function<bool(std::span<const double>)> singular; // optional

    double operator()(std::span<const double> x) const;
};

struct FDConfig {
    double h = 1e-4;          // base step, scaled by max(1, |x|_inf)
    int richardson_levels = 2; // >= 1; 1 = plain central differences
    double tol = 1e-6;

    void validate() const;
};

// Differential operators the verifier needs: the d'Alembertian with the
// printed signature -d00 + sum_a daa, the first-order Euler operator with an
// alpha*u term, and the second-order x_mu x_nu d_mu d_nu + alpha x_mu d_mu.
struct DiffOp {
    enum class Type { Box, EulerAlpha, SecondEuler };
    Type type = Type::Box;
    int n = 3;        // spatial dimension; fields live on R^{n+1}
    double alpha = 0; // unused by Box
};

// Applies `op` to f at x via central differences with Richardson
// extrapolation. Every stencil point is checked against the singular set.
double fd_operator_residual(const ScalarField& f, const DiffOp& op, std::span<const double> x,
                            const FDConfig& cfg);

// Individual FD derivatives (exposed for tests and the flow verifier).
double fd_partial(const ScalarField& f, int i, std::span<const double> x, const FDConfig& cfg);
double fd_second(const ScalarField& f, int i, int j, std::span<const double> x,
                 const FDConfig& cfg);

// Adaptive Simpson quadrature with a fixed panel budget. `singularities`
// lists known bad points; an interval containing one is rejected up front,
// and non-finite samples raise the same error.
double quadrature(const std::function<double(double)>& g, double a, double b, double tol,
                  std::span<const double> singularities = {});

// Classical fixed-step 4th order Runge-Kutta integration of dX/deps = field(X)
// from 0 to epsilon.
using OdeRhs = std::function<std::vector<double>(const std::vector<double>&)>;
std::vector<double> flow_integrate(const OdeRhs& field, std::vector<double> state0,
                                   double epsilon, int steps);

} // namespace condsym::numerics
