#pragma once

#include <string>
#include <vector>

#include "loccbound/ops.hpp"
#include "loccbound/space.hpp"
#include "loccbound/states.hpp"

namespace loccbound {

enum class SolveStatus { converged, max_iterations, infeasible };
enum class CutMode { all_cuts, single_cut };

std::string to_string(SolveStatus status);

struct SolverConfig {
    // Feasibility tolerance for the returned certificate; the internal
    // stopping target of the iteration is 100x tighter.
    double tol = 1e-6;
    int max_iter = 50'000;
    CutMode cuts = CutMode::all_cuts;
};

// Result of one cone program.  `certificate` is always exactly feasible (up
// to the reported residuals, which are tiny by construction), so `value` is a
// valid one-sided bound even when status == max_iterations:
//   - max_ppt_overlap:        value is a lower bound on the optimum,
//   - global_robustness_ppt:  value is an upper bound,
//   - discrimination_cost_ppt: value is an upper bound.
//
// residuals[0] is the affine constraint violation (0 when the program has
// none); residuals[1] is the base cone violation of the certificate;
// residuals[2..] are the per-cut partial-transpose violations in cut order.
// Invariant: status == converged implies every residual <= tol.
struct SolverResult {
    double value = 0.0;
    Matrix certificate;
    SolveStatus status = SolveStatus::converged;
    std::vector<double> residuals;
    int iterations = 0;

    double max_residual() const;
};

// True when every cut's partial transpose of rho has minimum eigenvalue
// >= -tol.
bool is_ppt(const DensityOperator& rho, double tol = 1e-9, CutMode mode = CutMode::all_cuts);

// Largest overlap tr(rho w) over unit-trace w >= 0 whose partial transpose
// across every cut is PSD.  This relaxes the overlap with separable states,
// so -log2(value) lower-bounds the geometric entanglement measure.
SolverResult max_ppt_overlap(const DensityOperator& rho, const SolverConfig& cfg = {});

// Least tr(Y) over Y >= 0 such that rho + Y has PSD partial transposes
// across every cut (a relaxation of the global robustness, where rho + Y
// would need to be proportional to a fully separable state).
SolverResult global_robustness_ppt(const DensityOperator& rho, const SolverConfig& cfg = {});

// Least tr(M) over 0 <= M <= 1 with tr(rho M) = 1 and PSD partial
// transposes across every cut: the minimum "measurement weight" a
// PPT-constrained protocol must spend to detect rho with certainty.
// Internally the equality forces M to act as the identity on the support of
// rho, so only the support-complement block is optimized.
SolverResult discrimination_cost_ppt(const DensityOperator& rho, const SolverConfig& cfg = {});

}  // namespace loccbound
