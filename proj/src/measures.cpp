#include "loccbound/measures.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace loccbound {

bool MeasureRecord::fully_converged() const {
    return overlap_status == SolveStatus::converged &&
           robustness_status == SolveStatus::converged &&
           cost_status == SolveStatus::converged;
}

MeasureRecord measure_state(const DensityOperator& rho, const SolverConfig& solver_cfg,
                            const ProductOptConfig& product_cfg,
                            const DensityOperator* separable_candidate) {
    MeasureRecord rec;
    rec.entropy = von_neumann_entropy(rho);

    const SupportProjector sup = support(rho);
    rec.support_size = sup.rank;

    const SolverResult overlap = max_ppt_overlap(rho, solver_cfg);
    rec.overlap_status = overlap.status;
    const double lam = std::min(std::max(overlap.value, 1e-300), 1.0);
    rec.g_lower = std::max(0.0, -std::log2(lam));

    const DensityOperator normalized_support(rho.space(), sup.projector / sup.rank);
    const SolverResult robustness = global_robustness_ppt(normalized_support, solver_cfg);
    rec.robustness_status = robustness.status;
    rec.r_ppt = sup.rank * (1.0 + robustness.value);

    const SolverResult cost = discrimination_cost_ppt(rho, solver_cfg);
    rec.cost_status = cost.status;
    rec.d_ppt = cost.value;

    rec.g_upper = geometric_measure_upper(rho, product_cfg);

    rec.er_lower = std::max(rec.g_lower - rec.entropy, 0.0);
    if (separable_candidate != nullptr)
        rec.er_upper = relative_entropy(rho, *separable_candidate);
    else
        rec.er_upper = relative_entropy(rho, dephase(rho));
    return rec;
}

double analytic_bipartite_robustness(const PureState& psi) {
    if (psi.space().party_count() != 2)
        throw std::invalid_argument("analytic_bipartite_robustness: state must be bipartite");
    const Bipartition cut(psi.space(), 1u);
    double sum = 0.0;
    for (double a : schmidt_coefficients(psi, cut)) sum += a;
    return sum * sum - 1.0;
}

AnalyticValues analytic_family_values(Family family, int m) {
    if (m < 2) throw std::invalid_argument("analytic_family_values: need m >= 2");
    switch (family) {
        case Family::ghz:
            return {1.0, 1.0};
        case Family::w: {
            const double g = (m - 1) * std::log2(static_cast<double>(m) / (m - 1));
            return {g, g};
        }
    }
    throw std::invalid_argument("analytic_family_values: unknown family");
}

namespace {

std::string describe(const char* relation, double lhs, double rhs) {
    std::ostringstream os;
    os << relation << " violated: " << lhs << " vs " << rhs;
    return os.str();
}

}  // namespace

ChainReport verify_chain(const MeasureRecord& rec, double slack, double overlap_slack,
                         double log_slack) {
    ChainReport report;
    const auto fail = [&report](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };
    if (rec.d_ppt < rec.r_ppt - slack)
        fail(describe("d_ppt >= r_ppt", rec.d_ppt, rec.r_ppt));
    const double two_g = std::exp2(rec.g_lower);
    if (rec.r_ppt < two_g - slack)
        fail(describe("r_ppt >= 2^g_lower", rec.r_ppt, two_g));
    if (rec.g_lower > rec.g_upper + log_slack)
        fail(describe("g_lower <= g_upper", rec.g_lower, rec.g_upper));
    // On overlap scale: the relaxed optimum must not fall below the overlap
    // achieved by an explicit product state.
    const double lam_relaxed = std::exp2(-rec.g_lower);
    const double lam_found = std::exp2(-rec.g_upper);
    if (lam_relaxed < lam_found - overlap_slack)
        fail(describe("relaxed overlap >= found product overlap", lam_relaxed, lam_found));
    if (rec.er_lower > rec.er_upper + log_slack)
        fail(describe("er_lower <= er_upper", rec.er_lower, rec.er_upper));
    if (rec.g_lower < 0.0 || rec.er_lower < 0.0)
        fail(describe("lower bounds >= 0", rec.g_lower, rec.er_lower));
    return report;
}

}  // namespace loccbound
