#include "condsym/calculus.hpp"

namespace condsym {

namespace {

bool is_coordinate(Sym s) { return SymTab::instance().kind(s) == SymKind::Coordinate; }
bool is_invariant(Sym s) { return SymTab::instance().kind(s) == SymKind::Invariant; }
bool is_radial(Sym s) { return SymTab::instance().kind(s) == SymKind::Radial; }

} // namespace

Expr differentiate(const Expr& e, Sym v) {
    switch (e.kind()) {
        case Kind::Rat:
            return ex::rat(0);
        case Kind::Symbol:
            return e.symbol() == v ? ex::rat(1) : ex::rat(0);
        case Kind::Sum: {
            std::vector<Expr> ts;
            ts.reserve(e.kids().size());
            for (const auto& k : e.kids()) ts.push_back(differentiate(k, v));
            return ex::sum(std::move(ts));
        }
        case Kind::Prod: {
            std::vector<Expr> ts;
            const auto& ks = e.kids();
            for (std::size_t i = 0; i < ks.size(); ++i) {
                Expr d = differentiate(ks[i], v);
                if (d.is_zero()) continue;
                std::vector<Expr> fs;
                fs.reserve(ks.size());
                for (std::size_t j = 0; j < ks.size(); ++j) fs.push_back(j == i ? d : ks[j]);
                ts.push_back(ex::prod(std::move(fs)));
            }
            return ex::sum(std::move(ts));
        }
        case Kind::Pow: {
            const Expr& b = e.kids()[0];
            const Expr& p = e.kids()[1];
            Expr db = differentiate(b, v);
            Expr dp = differentiate(p, v);
            if (dp.is_zero()) {
                if (db.is_zero()) return ex::rat(0);
                // p * b^(p-1) * db
                return ex::prod({p, ex::pow(b, ex::sub(p, ex::rat(1))), db});
            }
            if (db.is_zero()) return ex::prod({e, ex::ln(b), dp});
            return ex::mul(e, ex::add(ex::mul(dp, ex::ln(b)), ex::div(ex::mul(p, db), b)));
        }
        case Kind::Ln:
            return ex::div(differentiate(e.kids()[0], v), e.kids()[0]);
        case Kind::Sqrt:
            return ex::prod({ex::rat(1, 2), ex::pow(e.kids()[0], ex::rat(-1, 2)),
                             differentiate(e.kids()[0], v)});
        case Kind::Abs: {
            const Expr& a = e.kids()[0];
            Expr da = differentiate(a, v);
            if (da.is_zero()) return ex::rat(0);
            return ex::div(ex::mul(a, da), e);
        }
        case Kind::Exp:
            return ex::mul(e, differentiate(e.kids()[0], v));
        case Kind::Integral: {
            // d/dv int_b^{U} g(s) ds = g(U) * dU/dv; differentiating under
            // the integral sign is not supported
            if (v != sym::radial() && mentions_symbol(e.kids()[0], v))
                throw CalcError("integrand depends on the differentiation variable '" +
                                SymTab::instance().name(v) + "'");
            Expr dU = differentiate(e.kids()[1], v);
            if (dU.is_zero()) return ex::rat(0);
            Subst s;
            s.atoms[ex::wrad()] = e.kids()[1];
            Expr gU = substitute(e.kids()[0], s);
            return ex::mul(gU, dU);
        }
        case Kind::App: {
            Sym name = e.symbol();
            if (e.kids().empty()) {
                if (name == sym::u()) {
                    if (is_coordinate(v)) {
                        auto idx = e.derivs();
                        idx.push_back(static_cast<std::uint8_t>(SymTab::instance().index(v)));
                        return ex::app(name, std::move(idx), {});
                    }
                    if (v == sym::u()) return e.derivs().empty() ? ex::rat(1) : ex::rat(0);
                    return ex::rat(0);
                }
                // bare phi/psi/F: functions of the invariants
                if (is_radial(v)) {
                    auto idx = e.derivs();
                    idx.push_back(1);
                    return ex::app(name, std::move(idx), {});
                }
                if (is_invariant(v)) {
                    auto idx = e.derivs();
                    idx.push_back(static_cast<std::uint8_t>(SymTab::instance().index(v)));
                    return ex::app(name, std::move(idx), {});
                }
                return ex::rat(0);
            }
            // applied: chain rule over the arguments
            std::vector<Expr> terms;
            const auto& args = e.kids();
            for (std::size_t j = 0; j < args.size(); ++j) {
                Expr daj = differentiate(args[j], v);
                if (daj.is_zero()) continue;
                auto idx = e.derivs();
                std::uint8_t pos = static_cast<std::uint8_t>(name == sym::u() ? j : j + 1);
                idx.push_back(pos);
                terms.push_back(ex::mul(ex::app(name, std::move(idx), args), daj));
            }
            return ex::sum(std::move(terms));
        }
    }
    throw CalcError("differentiate: unhandled node");
}

Expr diff_atom(const Expr& e, const Expr& atom) {
    if (struct_eq(e, atom)) return ex::rat(1);
    switch (e.kind()) {
        case Kind::Rat:
        case Kind::Symbol:
            return ex::rat(0);
        case Kind::Sum: {
            std::vector<Expr> ts;
            for (const auto& k : e.kids()) ts.push_back(diff_atom(k, atom));
            return ex::sum(std::move(ts));
        }
        case Kind::Prod: {
            std::vector<Expr> ts;
            const auto& ks = e.kids();
            for (std::size_t i = 0; i < ks.size(); ++i) {
                Expr d = diff_atom(ks[i], atom);
                if (d.is_zero()) continue;
                std::vector<Expr> fs;
                for (std::size_t j = 0; j < ks.size(); ++j) fs.push_back(j == i ? d : ks[j]);
                ts.push_back(ex::prod(std::move(fs)));
            }
            return ex::sum(std::move(ts));
        }
        case Kind::Pow: {
            const Expr& b = e.kids()[0];
            const Expr& p = e.kids()[1];
            Expr db = diff_atom(b, atom);
            Expr dp = diff_atom(p, atom);
            if (dp.is_zero()) {
                if (db.is_zero()) return ex::rat(0);
                return ex::prod({p, ex::pow(b, ex::sub(p, ex::rat(1))), db});
            }
            if (db.is_zero()) return ex::prod({e, ex::ln(b), dp});
            return ex::mul(e, ex::add(ex::mul(dp, ex::ln(b)), ex::div(ex::mul(p, db), b)));
        }
        case Kind::Ln:
            return ex::div(diff_atom(e.kids()[0], atom), e.kids()[0]);
        case Kind::Sqrt:
            return ex::prod({ex::rat(1, 2), ex::pow(e.kids()[0], ex::rat(-1, 2)),
                             diff_atom(e.kids()[0], atom)});
        case Kind::Abs: {
            Expr da = diff_atom(e.kids()[0], atom);
            if (da.is_zero()) return ex::rat(0);
            return ex::div(ex::mul(e.kids()[0], da), e);
        }
        case Kind::Exp:
            return ex::mul(e, diff_atom(e.kids()[0], atom));
        case Kind::Integral: {
            Expr dU = diff_atom(e.kids()[1], atom);
            if (dU.is_zero()) return ex::rat(0);
            Subst s;
            s.atoms[ex::wrad()] = e.kids()[1];
            return ex::mul(substitute(e.kids()[0], s), dU);
        }
        case Kind::App: {
            // jet markers and bare applications are independent atoms;
            // explicit arguments still chain
            std::vector<Expr> terms;
            const auto& args = e.kids();
            Sym name = e.symbol();
            for (std::size_t j = 0; j < args.size(); ++j) {
                Expr daj = diff_atom(args[j], atom);
                if (daj.is_zero()) continue;
                auto idx = e.derivs();
                idx.push_back(static_cast<std::uint8_t>(name == sym::u() ? j : j + 1));
                terms.push_back(ex::mul(ex::app(name, std::move(idx), args), daj));
            }
            return ex::sum(std::move(terms));
        }
    }
    throw CalcError("diff_atom: unhandled node");
}

namespace {

Expr subst_rec(const Expr& e, const Subst& s) {
    auto hit = s.atoms.find(e);
    if (hit != s.atoms.end()) return hit->second;
    switch (e.kind()) {
        case Kind::Rat:
        case Kind::Symbol:
            return e;
        case Kind::Sum: {
            std::vector<Expr> ks;
            ks.reserve(e.kids().size());
            for (const auto& k : e.kids()) ks.push_back(subst_rec(k, s));
            return ex::sum(std::move(ks));
        }
        case Kind::Prod: {
            std::vector<Expr> ks;
            ks.reserve(e.kids().size());
            for (const auto& k : e.kids()) ks.push_back(subst_rec(k, s));
            return ex::prod(std::move(ks));
        }
        case Kind::Pow:
            return ex::pow(subst_rec(e.kids()[0], s), subst_rec(e.kids()[1], s));
        case Kind::Ln:
            return ex::ln(subst_rec(e.kids()[0], s));
        case Kind::Sqrt:
            return ex::sqrt(subst_rec(e.kids()[0], s));
        case Kind::Abs:
            return ex::abs(subst_rec(e.kids()[0], s));
        case Kind::Exp:
            return ex::exp(subst_rec(e.kids()[0], s));
        case Kind::Integral: {
            // the integration variable is bound inside the integrand; every
            // other mapping still applies there
            Expr upper = subst_rec(e.kids()[1], s);
            Subst inner = s;
            inner.atoms.erase(ex::wrad());
            Expr integrand = e.kids()[0];
            if (!inner.atoms.empty() || !inner.funcs.empty())
                integrand = subst_rec(integrand, inner);
            return ex::integral(integrand, upper, e.rat());
        }
        case Kind::App: {
            Sym name = e.symbol();
            std::vector<Expr> args;
            args.reserve(e.kids().size());
            for (const auto& a : e.kids()) args.push_back(subst_rec(a, s));
            auto fit = s.funcs.find(name);
            if (fit == s.funcs.end()) return ex::app(name, e.derivs(), std::move(args));
            const FuncBinding& fb = fit->second;
            if (!args.empty() && args.size() != fb.formals.size())
                throw CalcError("arity mismatch substituting '" + SymTab::instance().name(name) +
                                "': got " + std::to_string(args.size()) + " arguments, binding has " +
                                std::to_string(fb.formals.size()) + " formals");
            Expr d = fb.body;
            for (auto idx : e.derivs()) {
                std::size_t pos = name == sym::u() ? idx : static_cast<std::size_t>(idx) - 1;
                if (pos >= fb.formals.size())
                    throw CalcError("derivative index out of range for binding of '" +
                                    SymTab::instance().name(name) + "'");
                d = differentiate(d, fb.formals[pos]);
            }
            if (args.empty()) return d; // formals pass through unchanged
            Subst inner;
            for (std::size_t i = 0; i < args.size(); ++i)
                inner.atoms[ex::symbol(fb.formals[i])] = args[i];
            return subst_rec(d, inner);
        }
    }
    throw CalcError("substitute: unhandled node");
}

} // namespace

Expr substitute(const Expr& e, const Subst& s) { return subst_rec(e, s); }

Expr implicitize(const Expr& e) {
    switch (e.kind()) {
        case Kind::Rat:
        case Kind::Symbol:
            return e;
        case Kind::App: {
            std::vector<Expr> args;
            args.reserve(e.kids().size());
            for (const auto& a : e.kids()) args.push_back(implicitize(a));
            bool canonical = !args.empty() && e.symbol() != sym::u();
            if (canonical) {
                if (args.size() == 1 && args[0].is_symbol(sym::radial())) {
                    // phi(w) -> phi
                } else {
                    for (std::size_t i = 0; i < args.size(); ++i)
                        if (!args[i].is_symbol(sym::invariant(static_cast<int>(i) + 1))) {
                            canonical = false;
                            break;
                        }
                }
            }
            if (canonical) return ex::app(e.symbol(), e.derivs(), {});
            return ex::app(e.symbol(), e.derivs(), std::move(args));
        }
        default: {
            std::vector<Expr> ks;
            ks.reserve(e.kids().size());
            for (const auto& k : e.kids()) ks.push_back(implicitize(k));
            switch (e.kind()) {
                case Kind::Sum: return ex::sum(std::move(ks));
                case Kind::Prod: return ex::prod(std::move(ks));
                case Kind::Pow: return ex::pow(ks[0], ks[1]);
                case Kind::Ln: return ex::ln(ks[0]);
                case Kind::Sqrt: return ex::sqrt(ks[0]);
                case Kind::Abs: return ex::abs(ks[0]);
                case Kind::Exp: return ex::exp(ks[0]);
                case Kind::Integral: return ex::integral(ks[0], ks[1], e.rat());
                default: break;
            }
        }
    }
    throw CalcError("implicitize: unhandled node");
}

} // namespace condsym
