#include "condsym/eval.hpp"

#include <cmath>

namespace condsym {

namespace {

double eval_rec(const Expr& e, const Assignment& a);

double eval_app(const Expr& e, const Assignment& a) {
    Sym name = e.symbol();
    auto fit = a.funcs.find(name);
    if (fit == a.funcs.end()) {
        if (name == sym::u() && a.jets) {
            const JetVals& j = *a.jets;
            const auto& d = e.derivs();
            if (d.empty()) return j.u;
            if (d.size() == 1) {
                if (d[0] >= j.du.size()) throw EvalError("jet index out of range", e);
                return j.du[d[0]];
            }
            if (d.size() == 2) {
                if (d[0] >= j.d2u.size() || d[1] >= j.d2u.size())
                    throw EvalError("jet index out of range", e);
                return j.d2u[d[0]][d[1]];
            }
            throw EvalError("jet order above 2 has no numeric value", e);
        }
        throw EvalError("unbound function symbol '" + SymTab::instance().name(name) + "'", e);
    }
    const FuncBinding& fb = fit->second;
    if (!e.kids().empty() && e.kids().size() != fb.formals.size())
        throw EvalError("arity mismatch for '" + SymTab::instance().name(name) + "'", e);
    Expr d = fb.body;
    for (auto idx : e.derivs()) {
        std::size_t pos = name == sym::u() ? idx : static_cast<std::size_t>(idx) - 1;
        if (pos >= fb.formals.size())
            throw EvalError("derivative index out of range for binding", e);
        d = differentiate(d, fb.formals[pos]);
    }
    Assignment inner = a;
    if (!e.kids().empty()) {
        for (std::size_t i = 0; i < e.kids().size(); ++i)
            inner.vars[fb.formals[i]] = eval_rec(e.kids()[i], a);
    }
    return eval_rec(d, inner);
}

double eval_rec(const Expr& e, const Assignment& a) {
    switch (e.kind()) {
        case Kind::Rat:
            return e.rat().to_double();
        case Kind::Symbol: {
            auto it = a.vars.find(e.symbol());
            if (it != a.vars.end()) return it->second;
            if (a.jets && SymTab::instance().kind(e.symbol()) == SymKind::Coordinate) {
                int i = SymTab::instance().index(e.symbol());
                if (i < a.jets->dim()) return a.jets->x[i];
            }
            throw EvalError("unbound symbol '" + SymTab::instance().name(e.symbol()) + "'", e);
        }
        case Kind::Sum: {
            double s = 0;
            for (const auto& k : e.kids()) s += eval_rec(k, a);
            return s;
        }
        case Kind::Prod: {
            double p = 1;
            for (const auto& k : e.kids()) p *= eval_rec(k, a);
            return p;
        }
        case Kind::Pow: {
            double b = eval_rec(e.kids()[0], a);
            double p = eval_rec(e.kids()[1], a);
            if (b == 0 && p < 0) throw EvalError("zero raised to a negative power", e);
            if (b < 0) {
                // allow exact integer exponents on negative bases
                double ip;
                if (std::modf(p, &ip) != 0.0)
                    throw EvalError("negative base with non-integer exponent", e);
            }
            double r = std::pow(b, p);
            if (!std::isfinite(r)) throw EvalError("non-finite power", e);
            return r;
        }
        case Kind::Ln: {
            double v = eval_rec(e.kids()[0], a);
            if (v <= 0) throw EvalError("logarithm of a non-positive value", e);
            return std::log(v);
        }
        case Kind::Sqrt: {
            double v = eval_rec(e.kids()[0], a);
            if (v < 0) throw EvalError("square root of a negative value", e);
            return std::sqrt(v);
        }
        case Kind::Abs:
            return std::fabs(eval_rec(e.kids()[0], a));
        case Kind::Exp:
            return std::exp(eval_rec(e.kids()[0], a));
        case Kind::Integral: {
            if (!a.quadrature) throw EvalError("no quadrature backend attached", e);
            double upper = eval_rec(e.kids()[1], a);
            const Expr integrand = e.kids()[0];
            auto f = [&a, &integrand](double s) {
                Assignment inner = a;
                inner.vars[sym::radial()] = s;
                return eval_rec(integrand, inner);
            };
            return a.quadrature(f, e.rat().to_double(), upper);
        }
        case Kind::App:
            return eval_app(e, a);
    }
    throw EvalError("unhandled node in evaluation");
}

} // namespace

double eval_numeric(const Expr& e, const Assignment& a) { return eval_rec(e, a); }

} // namespace condsym
