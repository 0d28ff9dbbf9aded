#pragma once

#include <string>
#include <vector>

#include "loccbound/ppt_solver.hpp"
#include "loccbound/product_opt.hpp"

namespace loccbound {

// One state's distance-like entanglement quantities, all in bits where
// logarithmic.  [g_lower, g_upper] brackets the geometric measure between
// the ppt-relaxed overlap bound and the explicit product-state search;
// [er_lower, er_upper] brackets the relative entropy of entanglement
// (er_upper can be +infinity only if no separable candidate covers the
// support, which the default dephased candidate always does).
struct MeasureRecord {
    double entropy = 0.0;   // von Neumann entropy S
    int support_size = 0;   // rank of the support projector
    double g_lower = 0.0;   // -log2 of the ppt-relaxed max overlap
    double g_upper = 0.0;   // -log2 of the best product overlap found
    double er_lower = 0.0;  // max(g_lower - S, 0)
    double er_upper = 0.0;  // relative entropy to the separable candidate
    double r_ppt = 0.0;     // support_size * (1 + relaxed global robustness of the support)
    double d_ppt = 0.0;     // relaxed discrimination cost
    SolveStatus overlap_status = SolveStatus::converged;
    SolveStatus robustness_status = SolveStatus::converged;
    SolveStatus cost_status = SolveStatus::converged;

    bool fully_converged() const;
};

// Compute every quantity for one state.  `separable_candidate` overrides the
// default candidate (the dephased input) in the er_upper computation; it
// must be separable for the bound to mean anything, which is the caller's
// responsibility.
MeasureRecord measure_state(const DensityOperator& rho, const SolverConfig& solver_cfg = {},
                            const ProductOptConfig& product_cfg = {},
                            const DensityOperator* separable_candidate = nullptr);

// (sum of Schmidt coefficients)^2 - 1: the closed form of the global
// robustness of a bipartite pure state.
double analytic_bipartite_robustness(const PureState& psi);

enum class Family { ghz, w };

struct AnalyticValues {
    double relative_entropy = 0.0;
    double geometric = 0.0;
};

// Known closed-form entanglement values for the m-party GHZ and W states
// (both measures coincide on these families).
AnalyticValues analytic_family_values(Family family, int m);

struct ChainReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Check the provable orderings between the record's quantities:
//   d_ppt >= r_ppt >= 2^{g_lower},  g_lower <= g_upper,  er_lower <= er_upper,
// each with additive slack.  `slack` applies to the linear-scale chain links,
// `overlap_slack` to the overlap-scale comparison of the relaxed and found
// overlaps, and `log_slack` to the bit-scale sandwich comparisons.  Returns
// every violated relation by name.
ChainReport verify_chain(const MeasureRecord& rec, double slack = 1e-4,
                         double overlap_slack = 1e-6, double log_slack = 1e-5);

}  // namespace loccbound
