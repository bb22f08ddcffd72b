#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsfrac/expression.hpp"
#include "tsfrac/grid_function.hpp"

namespace tsfrac {

enum class LawId {
    Linearity,
    Product,
    Reciprocal,
    Quotient,
    PowerForward,
    PowerReciprocal,
    BackwardRelation,
    Semigroup,
    Inversion,
    IdentityOps,
};

std::string_view law_name(LawId id);

/// Outcome of one property check. For the discrete laws `residual` is the
/// max-norm difference over tested kappa points, relative to the largest
/// magnitude involved; for the refinement-ladder laws it is the final
/// absolute max-norm residual and refinement_residuals holds the ladder.
struct LawReport {
    LawId law_id = LawId::Linearity;
    std::string scale;
    std::string function;
    double mu = 0.0;
    std::optional<double> beta;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::vector<double> refinement_residuals;
    std::string note;  // error text when a check could not run
};

/// Relative tolerance of the discrete exactness class.
inline constexpr double kDiscreteTol = 1e-11;

// --- closed-form oracles ------------------------------------------------

/// Fractional derivative of (t - k)^n on the kappa domain:
/// nu^{1-mu} sum_{j=0}^{n-1} (rho(t) - k)^j (t - k)^{n-1-j}.
GridFunction oracle_power_forward(const TimeScale& ts, double k, unsigned n, double mu);

/// Fractional derivative of 1/(t - k)^n on the kappa domain:
/// -nu^{1-mu} sum_{j=0}^{n-1} 1/((rho(t) - k)^{n-j} (t - k)^{j+1}).
/// Throws PoleOnScale if (t - k)(rho(t) - k) = 0 at any kappa point.
GridFunction oracle_power_reciprocal(const TimeScale& ts, double k, unsigned n, double mu);

// --- discrete exactness checks (tolerance 1e-11 relative) ----------------
// All accept masked inputs and test only the kappa points where every
// operand (and its rho shift) is defined; a check with no testable points
// fails with a PoleOnScale note.

LawReport check_linearity(const GridFunction& f, const GridFunction& g, double mu,
                          double lambda1, double lambda2, std::string fn_desc = "");

/// Tests both product-rule forms: f' g + (f o rho) g' and f g' + f' (g o rho).
LawReport check_product_rule(const GridFunction& f, const GridFunction& g, double mu,
                             std::string fn_desc = "");

LawReport check_reciprocal(const GridFunction& f, double mu, std::string fn_desc = "");

LawReport check_quotient(const GridFunction& f, const GridFunction& g, double mu,
                         std::string fn_desc = "");

LawReport check_power_forward(const TimeScale& ts, double k, unsigned n, double mu,
                              std::string fn_desc = "");

LawReport check_power_reciprocal(const TimeScale& ts, double k, unsigned n, double mu,
                                 std::string fn_desc = "");

/// Backward reconstruction: f(t) - f^(mu)(t) nu^mu recovers f(rho(t)).
LawReport check_backward_relation(const GridFunction& f, double mu,
                                  std::string fn_desc = "");

/// Bundled reduction identities at one (scale, function, mu):
/// nabla of I^1 f = f; frac derivative at mu=1 = nabla bitwise; RL integral
/// at mu=1 = plain integral bitwise (both kernels); GL at mu=1 = backward
/// difference bitwise (uniform scales); negative-order aliases bitwise.
LawReport check_identity_ops(const GridFunction& f, double mu, std::string fn_desc = "");

/// Semigroup I^mu I^beta = I^{mu+beta} with mu = beta = 1 on any scale:
/// exact by a telescoping argument, checked at the discrete tolerance.
LawReport check_semigroup_exact(const GridFunction& f, std::string fn_desc = "");

/// Inversion at mu = 1 (nabla of I^1 = identity) on any scale.
LawReport check_inversion_exact(const GridFunction& f, std::string fn_desc = "");

// --- refinement-ladder checks --------------------------------------------
// The continuous-limit identities; checked on real_sample(lo,hi,N) ladders.
// Passing requires strictly decreasing residuals and a final residual below
// 5e-2 times the max magnitude of the target.

LawReport check_semigroup(const Expression& f, double mu, double beta, double lo,
                          double hi, const std::vector<std::size_t>& ladder,
                          std::string fn_desc = "");

/// nabla of I^{1-mu} I^mu f vs f, max norm over interior points (the first
/// 3 kappa points after a are excluded as the weak-singularity boundary
/// layer).
LawReport check_inversion(const Expression& f, double mu, double lo, double hi,
                          const std::vector<std::size_t>& ladder,
                          std::string fn_desc = "");

// --- suite ----------------------------------------------------------------

struct SuiteConfig {
    std::vector<std::string> scales;     // scale specs
    std::vector<std::string> functions;  // expression texts
    std::vector<double> orders;          // mu values for the discrete laws
    std::vector<std::pair<double, double>> semigroup_orders;  // ladder (mu, beta)
    std::vector<std::size_t> ladder = {256, 512, 1024, 2048};
    double interval_lo = 0.0;
    double interval_hi = 1.0;
    std::string ladder_function = "t";

    static SuiteConfig defaults();
    static SuiteConfig from_json_file(const std::string& path);
};

/// Runs every registered law over the config cross product, in deterministic
/// order. Per-law errors become failed reports; the suite never aborts.
std::vector<LawReport> run_suite(const SuiteConfig& config);

/// Deterministic JSON array of reports (17 significant digits).
std::string reports_to_json(const std::vector<LawReport>& reports);

}  // namespace tsfrac
