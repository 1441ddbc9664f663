#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "condsym/calculus.hpp"
#include "condsym/expr.hpp"

namespace condsym {

struct EvalError : std::runtime_error {
    EvalError(const std::string& msg, const Expr& where)
        : std::runtime_error(msg + " in subexpression: " + format(where)) {}
    explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric values for the jet variables u, u_mu, u_{mu nu} at one point.
struct JetVals {
    std::vector<double> x;
    double u = 0;
    std::vector<double> du;               // size n+1
    std::vector<std::vector<double>> d2u; // (n+1) x (n+1), symmetric

    int dim() const { return static_cast<int>(x.size()); }
};

using QuadratureFn =
    std::function<double(const std::function<double(double)>&, double, double)>;

// Binding environment for eval_numeric. Every free symbol of the evaluated
// expression must be bound: plain symbols through `vars` (coordinates fall
// back to `jets->x` when a jet point is attached), function symbols through
// `funcs` (closed forms, differentiated on demand for derivative markers) or
// through the jet point for u. Integral nodes need the `quadrature` hook.
struct Assignment {
    std::map<Sym, double> vars;
    std::map<Sym, FuncBinding> funcs;
    const JetVals* jets = nullptr;
    QuadratureFn quadrature;

    Assignment with(Sym s, double v) const {
        Assignment a = *this;
        a.vars[s] = v;
        return a;
    }
};

double eval_numeric(const Expr& e, const Assignment& a);

} // namespace condsym
