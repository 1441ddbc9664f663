#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "condsym/rational.hpp"
#include "condsym/symbols.hpp"

namespace condsym {

// Immutable expression tree over exact rationals, symbols, and unknown
// function applications with derivative markers. Nodes are shared and never
// mutated after construction, so expressions are safe to copy and read from
// any thread.
class Expr;

enum class Kind : std::uint8_t {
    Rat,       // rational constant
    Symbol,    // coordinate / invariant / parameter
    Sum,       // n-ary, >= 2 children
    Prod,      // n-ary, >= 2 children
    Pow,       // children: base, exponent
    Ln,
    Sqrt,
    Abs,
    Exp,
    App,       // function application: name, derivative indices, args
               // args empty = applied to its canonical (implicit) arguments
    Integral,  // kids = {integrand, upper}: integral of the integrand (in the
               // bound variable w) from a fixed rational basepoint up to the
               // upper-limit expression
};

struct Node {
    Kind kind;
    Rational rat;                      // Rat, and Integral basepoint
    Sym symbol = 0;                    // Symbol, App name
    std::vector<std::uint8_t> derivs;  // App: sorted derivative indices
    std::vector<Expr> kids;
    std::size_t hash = 0;
};

class Expr {
public:
    Expr() = default;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    bool valid() const { return node_ != nullptr; }
    const Node& node() const { return *node_; }
    Kind kind() const { return node_->kind; }
    const Rational& rat() const { return node_->rat; }
    Sym symbol() const { return node_->symbol; }
    const std::vector<Expr>& kids() const { return node_->kids; }
    const std::vector<std::uint8_t>& derivs() const { return node_->derivs; }
    std::size_t hash() const { return node_->hash; }

    bool is_rat() const { return node_->kind == Kind::Rat; }
    bool is_zero() const { return is_rat() && node_->rat.is_zero(); }
    bool is_one() const { return is_rat() && node_->rat.is_one(); }
    bool is_symbol(Sym s) const { return node_->kind == Kind::Symbol && node_->symbol == s; }

private:
    std::shared_ptr<const Node> node_;
};

// Total structural order: -1 / 0 / +1. Used for canonical sorting and as the
// structural equality test (cmp == 0).
int cmp(const Expr& a, const Expr& b);
inline bool struct_eq(const Expr& a, const Expr& b) { return cmp(a, b) == 0; }

namespace ex {

Expr rat(const Rational& r);
Expr rat(long long n, long long d = 1);
Expr symbol(Sym s);

// n-ary constructors flatten nested sums/products, fold rational constants
// and drop neutral elements; they return plain Rat/Symbol nodes when the
// result degenerates.
Expr sum(std::vector<Expr> terms);
Expr prod(std::vector<Expr> factors);
Expr pow(Expr base, Expr exponent);
Expr ln(Expr a);
Expr sqrt(Expr a);
Expr abs(Expr a);
Expr exp(Expr a);
Expr app(Sym name, std::vector<std::uint8_t> derivs, std::vector<Expr> args);
// integral of `integrand` (a function of the bound variable w) from
// `basepoint` to `upper`; the two-argument form uses w itself as the limit
Expr integral(Expr integrand, const Rational& basepoint);
Expr integral(Expr integrand, Expr upper, const Rational& basepoint);

Expr add(Expr a, Expr b);
Expr sub(Expr a, Expr b);
Expr mul(Expr a, Expr b);
Expr div(Expr a, Expr b);
Expr neg(Expr a);

// Common atoms.
Expr x(int i);
Expr w(int a);
Expr wrad();
Expr u();                                        // bare field
Expr ujet(std::vector<std::uint8_t> idx);        // D[u, idx...]
Expr fapp(Sym name);                             // bare function symbol
Expr fjet(Sym name, std::vector<std::uint8_t> idx);

} // namespace ex

// ASCII rendering per the project grammar; round-trips through parse() for
// everything the grammar can express.
std::string format(const Expr& e);

// Free symbols (Symbol nodes plus App names) of the expression.
void collect_symbols(const Expr& e, std::vector<Sym>& out);
bool mentions_symbol(const Expr& e, Sym s);
bool contains_subexpr(const Expr& e, const Expr& sub);

// Highest derivative-marker order of applications of `name` (0 if absent).
int jet_order(const Expr& e, Sym name);

} // namespace condsym
