#pragma once

#include <vector>

#include "condsym/calculus.hpp"
#include "condsym/eval.hpp"
#include "condsym/expr.hpp"
#include "condsym/lie.hpp"
#include "condsym/normal.hpp"

namespace condsym::testsupport {

// Deterministic random expressions over the project grammar. `funcs` adds
// bare/applied function symbols (for the jet-free properties keep it off).
class ExprGen {
public:
    explicit ExprGen(std::uint64_t seed, bool funcs = false) : rng_(seed), funcs_(funcs) {}

    Expr gen(int depth = 3) {
        if (depth <= 0) return leaf();
        switch (rng_.next() % (funcs_ ? 8 : 7)) {
            case 0:
            case 1:
                return ex::add(gen(depth - 1), gen(depth - 1));
            case 2:
            case 3:
                return ex::mul(gen(depth - 1), gen(depth - 1));
            case 4:
                return ex::pow(gen(depth - 1), ex::rat(static_cast<long long>(rng_.next() % 3)));
            case 5:
                return ex::sub(gen(depth - 1), gen(depth - 1));
            case 6:
                return leaf();
            default:
                return ex::app(sym::phi(), {}, {gen(depth - 1)});
        }
    }

    // Closed forms that are smooth and positive-safe on coordinates in [1,2].
    Expr smooth(int depth = 3) {
        if (depth <= 0) return smooth_leaf();
        switch (rng_.next() % 6) {
            case 0:
                return ex::add(smooth(depth - 1), smooth(depth - 1));
            case 1:
                return ex::mul(smooth(depth - 1), smooth(depth - 1));
            case 2:
                return ex::pow(smooth_leaf(), ex::rat(static_cast<long long>(1 + rng_.next() % 3)));
            case 3:
                return ex::ln(ex::add(ex::rat(2), ex::pow(smooth_leaf(), ex::rat(2))));
            case 4:
                return ex::sqrt(ex::add(ex::rat(1), ex::pow(smooth_leaf(), ex::rat(2))));
            default:
                return smooth_leaf();
        }
    }

    double uniform(double lo, double hi) { return rng_.uniform(lo, hi); }
    std::uint64_t next() { return rng_.next(); }

private:
    Expr leaf() {
        switch (rng_.next() % 5) {
            case 0: return ex::rat(static_cast<long long>(rng_.next() % 7) - 3);
            case 1: return ex::x(static_cast<int>(rng_.next() % 3));
            case 2: return ex::w(static_cast<int>(rng_.next() % 2) + 1);
            case 3: return ex::rat(static_cast<long long>(rng_.next() % 5), 1 + rng_.next() % 4);
            default: return ex::symbol(sym::alpha());
        }
    }
    Expr smooth_leaf() {
        switch (rng_.next() % 3) {
            case 0: return ex::x(0);
            case 1: return ex::x(1);
            default: return ex::x(2);
        }
    }

    lie::DetRng rng_;
    bool funcs_;
};

// Central-difference derivative of a closed-form expression, with one
// Richardson extrapolation; the independent oracle for differentiate().
inline double fd_derivative(const Expr& e, Sym v, const Assignment& base, double h = 1e-4) {
    auto at = [&](double shift) {
        Assignment a = base;
        a.vars[v] += shift;
        return eval_numeric(e, a);
    };
    auto central = [&](double hh) { return (at(hh) - at(-hh)) / (2 * hh); };
    double d1 = central(h), d2 = central(h / 2);
    return (4 * d2 - d1) / 3;
}

} // namespace condsym::testsupport
