#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "condsym/expr.hpp"
#include "condsym/lie.hpp"
#include "condsym/numerics.hpp"
#include "condsym/report.hpp"

namespace condsym::solutions {

struct SolutionsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Catalogued closed-form or quadrature-defined solution of one of the
// paper's reduced equations. Bodies are univariate in w; directional entries
// read w = m_a w_a, the radial entry reads w = w_a w_a.
struct SolutionEntry {
    std::string id;
    std::string level;   // "ode"
    Expr body;           // in w; may contain Integral nodes
    std::optional<Expr> alt_body; // e.g. the printed radial integrand kept for diffing
    std::string ansatz;  // "anz1" | "anz2-phi" | "anz2-psi"
    std::string mode;    // "directional" | "radial"
    Expr alpha;          // the entry's alpha (rational or symbolic)
    double domain_lo = 1.2, domain_hi = 4.0; // valid w-range (inclusive of margin)
    std::string provenance; // fixture id
    std::optional<std::string> partner; // coupled entry composed alongside (reduced4 pair)
    std::string note;
};

const std::vector<SolutionEntry>& catalog();
SolutionEntry entry(const std::string& id);
std::vector<std::string> catalog_ids();

struct ComposeParams {
    int n = 3;
    double alpha = 0;                     // numeric alpha for composition
    std::vector<Rational> m;              // unit direction; default e1
    double c1 = 1, c2 = 0, c3 = 1;
    std::string convention = "euler";     // anz1 exponent: euler (-alpha) | paper (+alpha)
    bool include_partner = true;          // compose coupled reduced4 pairs jointly

    static ComposeParams for_entry(const SolutionEntry& e, int n = 3);
};

// Closed expression for the composed spacetime field u(x).
Expr composed_expr(const SolutionEntry& e, const ComposeParams& p);
// Field evaluator with the inherited singular set (x0 = 0 and the pullback of
// the w-domain boundary).
numerics::ScalarField compose_full_solution(const SolutionEntry& e, const ComposeParams& p);

struct VerifyConfig {
    int n = 3;
    int samples = 120;
    std::uint64_t seed = 42;
    double tol = 1e-6;
    std::string convention = "euler";
    std::vector<Rational> m;  // default e1
    numerics::FDConfig fd{};
};

// Single-target verification. Targets: "fixture" (the entry's provenance
// equation), "derived" (reduction-module equation, per convention), "wave",
// "add1", "add2". Mode "symbolic" falls back to numeric when quadrature
// atoms survive substitution.
std::vector<report::CheckRow> verify(const std::string& entry_id, const std::string& target,
                                     const std::string& mode, const VerifyConfig& cfg);

// Layer 1: entry vs its printed fixture equation. Layer 2: entry vs the
// derived reduced equation (both anz1 conventions where relevant). Layer 3:
// composed field vs the wave equation and the generating condition, by
// finite differences. All statuses independent.
std::vector<report::CheckRow> verify_three_layer(const std::string& entry_id,
                                                 const VerifyConfig& cfg);

// Flow-transports the composed field along v and re-verifies; reports
// before/after residuals for each target ("wave", "add1", "add2").
std::vector<report::CheckRow> transform_and_verify(const std::string& entry_id,
                                                   const lie::VectorField& v, double epsilon,
                                                   const std::vector<std::string>& targets,
                                                   const VerifyConfig& cfg);

// Default quadrature hook used whenever entry bodies are evaluated.
double entry_quadrature(const std::function<double(double)>& g, double a, double b);

} // namespace condsym::solutions
