#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "condsym/expr.hpp"
#include "condsym/lie.hpp"
#include "condsym/normal.hpp"
#include "condsym/numerics.hpp"

namespace condsym::reduction {

struct ReductionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Substitution template u = sum_i scale_i(x0) * f_i(x_a/x0).
struct AnsatzTerm {
    Expr scale;
    Sym fname;
};
struct Ansatz {
    int n = 3;
    std::vector<AnsatzTerm> terms;
    std::string label;

    Expr as_expr() const;
};

// u = x0^beta * phi(x_a/x0). The exponent convention is explicit: `paper`
// matches the printed general solution (beta = alpha), `euler` is the
// exponent forced by applying x_mu d_mu to the ansatz (beta = -alpha).
Ansatz ansatz_anz1(int n, const Expr& beta);
Expr anz1_beta_paper(const Expr& alpha);
Expr anz1_beta_euler(const Expr& alpha);

// u = x0^{1-alpha} psi + f(x0) phi with f = ln x0 at alpha = 1, else 1.
Ansatz ansatz_anz2(int n, const Expr& alpha);

struct ReducedEquation {
    Expr eq;          // canonical: content-free, sign-normalized
    Expr raw;         // bucket content exactly as split (for completeness)
    ExpoKey scale_x0; // provenance: this bucket multiplied x0^scale * ln^q
    int scale_ln = 0;
    std::vector<Sym> unknowns;
};
struct ReducedSystem {
    int n = 3;
    std::vector<ReducedEquation> equations;
    std::string label;
};

// Substitutes the ansatz into the (single, F = 0) wave equation and changes
// variables to (x0, w_a): exact, no truncation.
Expr substitute_ansatz(const lie::PDESystem& sys, const Ansatz& a);

ReducedSystem split_by_scale(const Expr& e, int n);

ReducedSystem derive_anz1(int n, const Expr& beta);
ReducedSystem derive_anz2(int n, const Expr& alpha);

// ---------------------------------------------------------------------------
// Index-pattern form of a reduced equation: per unknown, the coefficients of
// f, w_a f_a, w_a w_b f_ab and f_aa. This is what projection and the
// term-labeled diffs work on.
struct ContractionPattern {
    ParamPoly plain, grad, hess, lap;
};
// nullopt when the equation does not have the contraction shape.
std::optional<std::map<Sym, ContractionPattern>> extract_patterns(const Expr& eq, int n,
                                                                  std::string* why = nullptr);

enum class ProjMode { Directional, Radial };

// Projects a reduced PDE onto an ODE in w. Directional: w = m_a w_a with a
// rational unit vector m; radial: w = w_a w_a with n kept symbolic.
Expr project_ode(const Expr& eq, int n, ProjMode mode,
                 const std::vector<Rational>& m = {});

// ODE canonical form: divide by the rational content, positive sign on the
// f'' coefficient.
Expr canonical_ode(const Expr& ode);

// ---------------------------------------------------------------------------

struct DiffRow {
    std::string term;
    std::string derived;
    std::string fixture;
    bool equal = false;
};
struct DiffReport {
    std::string fixture_id;
    std::string verdict; // "match" | "mismatch" | "incomparable"
    std::vector<DiffRow> rows;
    std::vector<std::string> mismatched_terms;
    std::string note;
};

// Term-by-term coefficient diff of two equations on normalized forms, after
// the shared canonical scaling. `ode` selects the ODE sign convention.
DiffReport compare_with_paper(const Expr& derived, const Expr& fixture, int n,
                              const std::string& fixture_id, bool ode = false);

// Matches derived equations to fixture lines by unknown set and diffs each.
std::vector<DiffReport> compare_system_with_paper(const ReducedSystem& derived,
                                                  const std::vector<Expr>& fixture_lines, int n,
                                                  const std::string& fixture_id);

// ---------------------------------------------------------------------------
// Numeric arbitration: compare the finite-difference Box residual of
// u = x0^beta * phi0(x_a/x0) against an expression in (x0, w_a, phi-jets).

struct OracleResult {
    double max_rel_dev = 0;
    int points = 0;
};

// `expr` is evaluated with phi bound to phi0 and w_a := x_a/x0; params bind
// alpha/beta values. Returns the max relative deviation from the FD Box
// residual of the composed field over `points` samples.
OracleResult oracle_vs_box(const Expr& expr, const Expr& u_composed,
                           const std::map<Sym, double>& params, const FuncBinding& phi0, int n,
                           int points, std::uint64_t seed, const lie::Region& region,
                           const numerics::FDConfig& cfg);

// Convenience for the anz1 pipeline: checks the raw substituted expression
// against the FD oracle for one concrete profile phi0.
OracleResult arbitrate_anz1(const Expr& candidate_eq_times_scale, const Expr& beta_value, int n,
                            const FuncBinding& phi0, int points, std::uint64_t seed,
                            const numerics::FDConfig& cfg);

// Composed field expression u = x0^beta * phi0(x_a/x0) (phi0 silently bound).
Expr compose_anz1_field(int n, const Expr& beta_value, const FuncBinding& phi0);

} // namespace condsym::reduction
