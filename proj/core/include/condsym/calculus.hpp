#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "condsym/expr.hpp"

namespace condsym {

struct CalcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed form bound to a function symbol: body expression over the listed
// formal symbols. Derivative markers on a bound application differentiate
// the body with respect to the corresponding formal. For the field u the
// marker indices are coordinate indices (0-based into formals); for phi/psi
// they are 1-based argument positions.
struct FuncBinding {
    std::vector<Sym> formals;
    Expr body;
};

struct ExprLess {
    bool operator()(const Expr& a, const Expr& b) const { return cmp(a, b) < 0; }
};

struct Subst {
    std::map<Expr, Expr, ExprLess> atoms;   // simultaneous atom replacement
    std::map<Sym, FuncBinding> funcs;       // function-symbol bindings
};

// d e / d v. v is a coordinate, invariant, the radial w, or the field u.
// Bare u-applications are implicit functions of the coordinates (so this is
// the total derivative on jet expressions); bare phi/psi are functions of
// the invariants. Applied function symbols follow the chain rule.
Expr differentiate(const Expr& e, Sym v);

// Partial derivative treating `atom` (a symbol, or a jet marker such as
// D[u,0,1]) as an independent variable and every other jet marker and bare u
// as frozen. Explicit dependence through compound nodes still chains.
Expr diff_atom(const Expr& e, const Expr& atom);

// Simultaneous substitution. Function bindings receive their arguments in
// the formal slots; applications with empty argument lists pass the formals
// through unchanged. Throws CalcError on arity mismatch.
Expr substitute(const Expr& e, const Subst& s);

// Rewrites applications whose explicit arguments are exactly (w1..wk) or (w)
// back to the bare implicit-argument form.
Expr implicitize(const Expr& e);

} // namespace condsym
