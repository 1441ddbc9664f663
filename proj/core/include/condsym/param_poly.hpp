#pragma once

#include <map>
#include <optional>
#include <vector>

#include "condsym/rational.hpp"
#include "condsym/symbols.hpp"

namespace condsym {

class Expr;

// Laurent monomial in parameter symbols: sorted (symbol, exponent) pairs,
// exponents nonzero integers (negative allowed, e.g. alpha^-1 from the
// exponent 1/alpha).
using PMono = std::vector<std::pair<Sym, int>>;

// Polynomial in the parameters (alpha, n, beta, m_a, c_i, ...) with exact
// rational coefficients. This is the coefficient ring of the normal form.
class ParamPoly {
public:
    ParamPoly() = default;
    explicit ParamPoly(const Rational& c) {
        if (!c.is_zero()) t_[{}] = c;
    }
    static ParamPoly var(Sym s, int exp = 1) {
        ParamPoly p;
        p.t_[{{s, exp}}] = Rational(1);
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    Rational constant_term() const {
        auto it = t_.find({});
        return it == t_.end() ? Rational(0) : it->second;
    }
    // Splits off the constant term; returns {constant, rest}.
    std::pair<Rational, ParamPoly> split_constant() const {
        ParamPoly rest = *this;
        Rational c(0);
        auto it = rest.t_.find({});
        if (it != rest.t_.end()) { c = it->second; rest.t_.erase(it); }
        return {c, rest};
    }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }
    friend bool operator<(const ParamPoly& a, const ParamPoly& b) { return a.t_ < b.t_; }

    // Multiplicative inverse of a single-term polynomial; nullopt otherwise.
    std::optional<ParamPoly> try_invert() const;
    // Exact division; nullopt when not divisible.
    std::optional<ParamPoly> try_divide(const ParamPoly& d) const;

    // gcd of the absolute values of all coefficients (0 for the zero poly).
    Rational content() const;
    // Sign of the leading (largest PMono) coefficient; 0 for zero.
    int lead_sign() const;

    double eval(const std::map<Sym, double>& vals) const;
    Expr render() const;
    std::string str() const;

    const std::map<PMono, Rational>& terms() const { return t_; }

private:
    std::map<PMono, Rational> t_;
};

} // namespace condsym
