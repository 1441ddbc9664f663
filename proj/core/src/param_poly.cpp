#include "condsym/param_poly.hpp"

#include <cmath>
#include <stdexcept>

#include "condsym/expr.hpp"

namespace condsym {

namespace {
PMono pmono_mul(const PMono& a, const PMono& b) {
    PMono r;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
        else {
            int e = a[i].second + b[j].second;
            if (e != 0) r.push_back({a[i].first, e});
            ++i; ++j;
        }
    }
    return r;
}

// a / b when exponentwise subtraction is exact in the Laurent sense (always
// defined); used by try_divide's leading-term steps.
PMono pmono_div(const PMono& a, const PMono& b) {
    PMono binv = b;
    for (auto& [s, e] : binv) e = -e;
    return pmono_mul(a, binv);
}
} // namespace

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r = a;
    for (const auto& [m, c] : b.t_) {
        auto it = r.t_.find(m);
        if (it == r.t_.end()) r.t_[m] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) r.t_.erase(it);
        }
    }
    return r;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [m, c] : t_) r.t_[m] = -c;
    return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            PMono m = pmono_mul(ma, mb);
            Rational c = ca * cb;
            auto it = r.t_.find(m);
            if (it == r.t_.end()) r.t_[m] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    return r;
}

std::optional<ParamPoly> ParamPoly::try_invert() const {
    if (t_.size() != 1) return std::nullopt;
    const auto& [m, c] = *t_.begin();
    PMono minv = m;
    for (auto& [s, e] : minv) e = -e;
    ParamPoly r;
    r.t_[minv] = Rational(1) / c;
    return r;
}

std::optional<ParamPoly> ParamPoly::try_divide(const ParamPoly& d) const {
    if (d.is_zero()) return std::nullopt;
    if (d.t_.size() == 1) {
        const auto& [dm, dc] = *d.t_.begin();
        ParamPoly q;
        for (const auto& [m, c] : t_) q.t_[pmono_div(m, dm)] = c / dc;
        return q;
    }
    ParamPoly rem = *this, q;
    const auto& dl = *d.t_.rbegin();
    int guard = static_cast<int>(t_.size() * d.t_.size()) * 4 + 64;
    while (!rem.t_.empty()) {
        if (--guard < 0) return std::nullopt;
        const auto& rl = *rem.t_.rbegin();
        PMono tm = pmono_div(rl.first, dl.first);
        // exact Laurent division always "succeeds" monomial-wise; divisibility
        // is decided by whether the remainder reaches zero
        Rational tc = rl.second / dl.second;
        ParamPoly t;
        t.t_[tm] = tc;
        // progress check: leading term of t*d must equal leading term of rem
        ParamPoly td = t * d;
        if (td.t_.rbegin()->first != rl.first) return std::nullopt;
        q += t;
        rem = rem - td;
    }
    return q;
}

Rational ParamPoly::content() const {
    Rational g(0);
    for (const auto& [m, c] : t_) g = Rational::gcd(g, c);
    return g;
}

int ParamPoly::lead_sign() const {
    if (t_.empty()) return 0;
    return t_.rbegin()->second.is_negative() ? -1 : 1;
}

double ParamPoly::eval(const std::map<Sym, double>& vals) const {
    double acc = 0;
    for (const auto& [m, c] : t_) {
        double term = c.to_double();
        for (const auto& [s, e] : m) {
            auto it = vals.find(s);
            if (it == vals.end())
                throw std::runtime_error("unbound parameter '" + SymTab::instance().name(s) +
                                         "' in coefficient evaluation");
            term *= std::pow(it->second, e);
        }
        acc += term;
    }
    return acc;
}

Expr ParamPoly::render() const {
    std::vector<Expr> terms;
    for (const auto& [m, c] : t_) {
        std::vector<Expr> fs;
        fs.push_back(ex::rat(c));
        for (const auto& [s, e] : m) fs.push_back(ex::pow(ex::symbol(s), ex::rat(e)));
        terms.push_back(ex::prod(std::move(fs)));
    }
    return ex::sum(std::move(terms));
}

std::string ParamPoly::str() const { return format(render()); }

} // namespace condsym
