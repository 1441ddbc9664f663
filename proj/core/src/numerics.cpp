#include "condsym/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace condsym::numerics {

double ScalarField::operator()(std::span<const double> x) const {
    if (singular && singular(x))
        throw NumericsError("field queried inside its singular set");
    double v = eval(x);
    if (!std::isfinite(v)) throw NumericsError("field evaluated to a non-finite value");
    return v;
}

void FDConfig::validate() const {
    if (h <= 0) throw NumericsError("FD step must be positive");
    if (richardson_levels < 1) throw NumericsError("need at least one Richardson level");
    if (tol <= 0) throw NumericsError("tolerance must be positive");
}

namespace {

double scaled_step(const FDConfig& cfg, std::span<const double> x) {
    double m = 1;
    for (double xi : x) m = std::max(m, std::fabs(xi));
    return cfg.h * m;
}

void check_point(const ScalarField& f, std::span<const double> x) {
    if (f.singular && f.singular(x)) throw NumericsError("FD stencil intersects the singular set");
}

// Richardson/Neville extrapolation of estimates with error series in h^2.
double extrapolate(const std::vector<double>& est) {
    std::vector<double> t = est;
    std::size_t L = t.size();
    for (std::size_t k = 1; k < L; ++k) {
        double f = std::pow(4.0, static_cast<double>(k));
        for (std::size_t j = L - 1; j >= k; --j) t[j] = (f * t[j] - t[j - 1]) / (f - 1.0);
    }
    return t[L - 1];
}

double central_first(const ScalarField& f, int i, std::span<const double> x, double h) {
    std::vector<double> p(x.begin(), x.end());
    p[i] = x[i] + h;
    check_point(f, p);
    double fp = f(p);
    p[i] = x[i] - h;
    check_point(f, p);
    double fm = f(p);
    return (fp - fm) / (2 * h);
}

double central_second(const ScalarField& f, int i, int j, std::span<const double> x, double h) {
    std::vector<double> p(x.begin(), x.end());
    if (i == j) {
        check_point(f, x);
        double f0 = f(x);
        p[i] = x[i] + h;
        check_point(f, p);
        double fp = f(p);
        p[i] = x[i] - h;
        check_point(f, p);
        double fm = f(p);
        return (fp - 2 * f0 + fm) / (h * h);
    }
    auto at = [&](double di, double dj) {
        p.assign(x.begin(), x.end());
        p[i] += di;
        p[j] += dj;
        check_point(f, p);
        return f(p);
    };
    return (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
}

template <class Est>
double richardson(const Est& estimate, double h0, int levels) {
    std::vector<double> est;
    est.reserve(levels);
    double h = h0;
    for (int l = 0; l < levels; ++l) {
        est.push_back(estimate(h));
        h /= 2;
    }
    return extrapolate(est);
}

} // namespace

double fd_partial(const ScalarField& f, int i, std::span<const double> x, const FDConfig& cfg) {
    cfg.validate();
    double h0 = scaled_step(cfg, x);
    return richardson([&](double h) { return central_first(f, i, x, h); }, h0,
                      cfg.richardson_levels);
}

double fd_second(const ScalarField& f, int i, int j, std::span<const double> x,
                 const FDConfig& cfg) {
    cfg.validate();
    double h0 = scaled_step(cfg, x);
    return richardson([&](double h) { return central_second(f, i, j, x, h); }, h0,
                      cfg.richardson_levels);
}

double fd_operator_residual(const ScalarField& f, const DiffOp& op, std::span<const double> x,
                            const FDConfig& cfg) {
    cfg.validate();
    if (static_cast<int>(x.size()) != op.n + 1)
        throw NumericsError("point dimension does not match the operator");
    if (f.dim != op.n + 1)
        throw NumericsError("operator references coordinates beyond the field dimension");
    switch (op.type) {
        case DiffOp::Type::Box: {
            double acc = -fd_second(f, 0, 0, x, cfg);
            for (int a2 = 1; a2 <= op.n; ++a2) acc += fd_second(f, a2, a2, x, cfg);
            return acc;
        }
        case DiffOp::Type::EulerAlpha: {
            double acc = op.alpha * f(x);
            for (int mu = 0; mu <= op.n; ++mu) acc += x[mu] * fd_partial(f, mu, x, cfg);
            return acc;
        }
        case DiffOp::Type::SecondEuler: {
            double acc = 0;
            for (int mu = 0; mu <= op.n; ++mu) {
                acc += op.alpha * x[mu] * fd_partial(f, mu, x, cfg);
                for (int nu = 0; nu <= op.n; ++nu)
                    acc += x[mu] * x[nu] * fd_second(f, mu, nu, x, cfg);
            }
            return acc;
        }
    }
    throw NumericsError("unknown operator");
}

// ---------------------------------------------------------------------------

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4 * fm + fb);
}

double sample(const std::function<double(double)>& g, double t) {
    double v = g(t);
    if (!std::isfinite(v))
        throw NumericsError("integrand is singular near t = " + std::to_string(t));
    return v;
}

struct QuadState {
    const std::function<double(double)>& g;
    double tol;
    int budget;
};

double adapt(QuadState& st, double a, double fa, double b, double fb, double m, double fm,
             double whole, double tol, int depth) {
    if (--st.budget < 0) throw NumericsError("quadrature did not converge within the panel budget");
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = sample(st.g, lm), frm = sample(st.g, rm);
    double left = simpson(a, fa, m, fm, flm);
    double right = simpson(m, fm, b, fb, frm);
    double err = (left + right - whole) / 15.0;
    if (depth > 2 && std::fabs(err) <= tol) return left + right + err;
    return adapt(st, a, fa, m, fm, lm, flm, left, tol / 2, depth + 1) +
           adapt(st, m, fm, b, fb, rm, frm, right, tol / 2, depth + 1);
}

} // namespace

double quadrature(const std::function<double(double)>& g, double a, double b, double tol,
                  std::span<const double> singularities) {
    if (tol <= 0) throw NumericsError("quadrature tolerance must be positive");
    if (a == b) return 0;
    double lo = std::min(a, b), hi = std::max(a, b);
    for (double s : singularities)
        if (s >= lo && s <= hi)
            throw NumericsError("declared singular point " + std::to_string(s) +
                                " lies inside the integration interval");
    QuadState st{g, tol, 10000};
    double fa = sample(g, a), fb = sample(g, b);
    double m = 0.5 * (a + b), fm = sample(g, m);
    double whole = simpson(a, fa, b, fb, fm);
    return adapt(st, a, fa, b, fb, m, fm, whole, tol, 0);
}

std::vector<double> flow_integrate(const OdeRhs& field, std::vector<double> state0, double epsilon,
                                   int steps) {
    if (steps < 1) throw NumericsError("flow integration needs at least one step");
    std::size_t d = state0.size();
    double h = epsilon / steps;
    std::vector<double> y = std::move(state0), tmp(d);
    for (int s = 0; s < steps; ++s) {
        std::vector<double> k1 = field(y);
        for (std::size_t i = 0; i < d; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        std::vector<double> k2 = field(tmp);
        for (std::size_t i = 0; i < d; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        std::vector<double> k3 = field(tmp);
        for (std::size_t i = 0; i < d; ++i) tmp[i] = y[i] + h * k3[i];
        std::vector<double> k4 = field(tmp);
        for (std::size_t i = 0; i < d; ++i) {
            y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
            if (!std::isfinite(y[i]))
                throw NumericsError("non-finite state during flow integration");
        }
    }
    return y;
}

} // namespace condsym::numerics
