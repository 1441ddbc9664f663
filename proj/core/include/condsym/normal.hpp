#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "condsym/expr.hpp"
#include "condsym/param_poly.hpp"

namespace condsym {

struct NormError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponent of a multiplicative factor: exact rational part plus a symbolic
// parameter-polynomial part (constant-free), e.g. x0^(beta-2) carries
// {r: -2, s: beta}.
struct ExpoKey {
    Rational r{0};
    ParamPoly s;

    bool is_zero() const { return r.is_zero() && s.is_zero(); }
    bool is_rational() const { return s.is_zero(); }
    bool is_integer() const { return s.is_zero() && r.is_integer(); }
    ExpoKey operator+(const ExpoKey& o) const { return {r + o.r, s + o.s}; }
    ExpoKey operator-() const { return {-r, -s}; }
    friend bool operator==(const ExpoKey& a, const ExpoKey& b) { return a.r == b.r && a.s == b.s; }
    friend bool operator<(const ExpoKey& a, const ExpoKey& b) {
        if (!(a.r == b.r)) return a.r < b.r;
        return a.s < b.s;
    }
    Expr render() const;
};

// Monomial: sorted (canonical base expression, exponent) pairs. Bases are
// symbols, function applications / jet markers, ln/abs/exp/integral atoms,
// canonical polynomials under fractional or symbolic powers, or opaque power
// atoms whose exponent would not canonicalize.
struct FactorEntry {
    Expr base;
    ExpoKey exp;
    friend bool operator==(const FactorEntry& a, const FactorEntry& b) {
        return struct_eq(a.base, b.base) && a.exp == b.exp;
    }
};
using Mono = std::vector<FactorEntry>;

struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Sum of monomials with ParamPoly coefficients.
struct Poly {
    std::map<Mono, ParamPoly, MonoLess> t;

    bool is_zero() const { return t.empty(); }
    void add_term(const Mono& m, const ParamPoly& c);
    friend bool operator==(const Poly& a, const Poly& b) { return a.t == b.t; }
    // Rational content together with the sign of the leading coefficient.
    Rational content_signed() const;
};

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const;
};

// Canonical quotient form: numerator polynomial over a product of canonical
// denominator factors. Two expressions are equal iff their difference
// normalizes to an empty numerator.
struct NormalExpr {
    Poly num;
    std::map<Poly, int, PolyLess> den;

    bool is_zero() const { return num.is_zero(); }
    friend bool operator==(const NormalExpr& a, const NormalExpr& b) {
        return a.num == b.num && a.den == b.den;
    }
};

NormalExpr normalize(const Expr& e);
Expr render(const NormalExpr& n);
// render(normalize(e)) -- canonical form of e as an expression tree.
Expr simplified(const Expr& e);
bool is_zero_expr(const Expr& e);
bool equal_modulo_normal(const Expr& a, const Expr& b);

NormalExpr nx_rat(const Rational& r);
NormalExpr nx_add(const NormalExpr& a, const NormalExpr& b);
NormalExpr nx_sub(const NormalExpr& a, const NormalExpr& b);
NormalExpr nx_mul(const NormalExpr& a, const NormalExpr& b);
NormalExpr nx_neg(const NormalExpr& a);
NormalExpr nx_inv(const NormalExpr& a);
NormalExpr nx_pow_int(const NormalExpr& a, long long k);

// Splits an expression that is polynomial in ln(x0) with finitely many
// x0-powers into buckets keyed by (x0 exponent, ln x0 exponent). The sum of
// x0^p * ln(x0)^q * content over all buckets reproduces the input up to
// normalize-equality. Throws NormError when x0 occurs somewhere it cannot be
// extracted from (inside another atom or a denominator factor).
struct ScaleBucket {
    ExpoKey x0_power;
    int ln_power;
    Expr content;
};
std::vector<ScaleBucket> collect_scales(const Expr& e);

} // namespace condsym
