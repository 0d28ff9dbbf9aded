#pragma once

#include <string>
#include <vector>

#include "loccbound/measures.hpp"
#include "loccbound/ppt_solver.hpp"

namespace loccbound {

// A labeled ensemble of states on a common space.
struct StateSet {
    MultipartiteSpace space;
    std::vector<std::string> labels;
    std::vector<DensityOperator> states;

    int size() const { return static_cast<int>(states.size()); }
    void add(std::string label, DensityOperator state);
};

// Measurement with one element per hypothesis.  Elements are checked for
// hermiticity (within 1e-10) at construction.
class Povm {
public:
    explicit Povm(std::vector<Matrix> elements);
    const std::vector<Matrix>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }

private:
    std::vector<Matrix> elements_;
};

// The four requirements on a measurement that discriminates the set
// perfectly while remaining implementable under the positive-partial-
// transpose relaxation of local protocols:
//   completeness       sum_i M_i = 1,
//   element bounds     0 <= M_i <= 1,
//   perfect detection  tr(M_i rho_i) = 1 for every i,
//   relaxed locality   every M_i has PSD partial transposes on every cut.
struct PovmConditionReport {
    double completeness_dev = 0.0;
    double bound_dev = 0.0;
    double detection_dev = 0.0;
    double ppt_dev = 0.0;
    double tol = 0.0;

    bool completeness() const { return completeness_dev <= tol; }
    bool element_bounds() const { return bound_dev <= tol; }
    bool perfect_detection() const { return detection_dev <= tol; }
    bool elements_ppt() const { return ppt_dev <= tol; }
    bool all_pass() const {
        return completeness() && element_bounds() && perfect_detection() && elements_ppt();
    }
};

PovmConditionReport povm_conditions_check(const Povm& povm, const StateSet& set,
                                          double tol = 1e-8,
                                          CutMode mode = CutMode::all_cuts);

enum class Verdict { possibly_discriminable, provably_not_discriminable };
std::string to_string(Verdict verdict);

// Necessary-condition check: perfect discrimination of N states under the
// relaxation forces sum_i d_ppt(rho_i) <= total dimension.  Exceeding it (by
// more than the stated margin) certifies impossibility; satisfying it proves
// nothing, so that outcome stays "possibly discriminable".
struct BoundReport {
    int total_dim = 0;
    int state_count = 0;
    std::vector<double> costs;  // d_ppt per state
    std::vector<SolveStatus> cost_status;
    double cost_sum = 0.0;
    double margin = 0.0;      // decision margin: state_count * solver tol
    Verdict verdict = Verdict::possibly_discriminable;
    bool saturated = false;   // |cost_sum - total_dim| <= state_count * 1e-3

    bool all_converged() const;
};

BoundReport make_bound_report(std::vector<double> costs, std::vector<SolveStatus> statuses,
                              int total_dim, double tol);
BoundReport dimension_bound_check(const StateSet& set, const SolverConfig& cfg = {});

// Integer part of a real count bound.  Raw bounds computed from certified
// solves can land a hair below an exactly attained integer (the certified
// error is one-sided), so values within 1e-4 of an integer snap to it before
// flooring; 1e-4 is far above solver error and far below the spacing of
// genuinely distinct bounds at this scale.
long floored_count(double raw);

// Upper bounds on how many states with the given measured profiles any
// relaxed protocol can tell apart: for each quantity, N * average <= D.
struct CountBounds {
    double raw_cost = 0.0;           // D / avg d_ppt
    double raw_robustness = 0.0;     // D / avg r_ppt
    double raw_entropy_proxy = 0.0;  // D / avg 2^{er_lower + S}
    double raw_geometric = 0.0;      // D / avg 2^{g_lower}
    long n_cost = 0, n_robustness = 0, n_entropy_proxy = 0, n_geometric = 0;  // floors
};
CountBounds state_count_bounds(const std::vector<MeasureRecord>& records, int total_dim);

// d1*d2 / (sum of Schmidt coefficients)^2: bound on the number of copies of
// a bipartite pure state (given by its Schmidt coefficients) that fit.
double bipartite_bound(const std::vector<double>& schmidt, int d1, int d2);

// The closed-form count bounds for the m-party GHZ (2^{m-1}, tight) and W
// (2^m ((m-1)/m)^{m-1}) families.  For m >= 3 the W bound always floors
// strictly below the GHZ bound; that ordering is re-checked here.
struct GhzWBounds {
    int m = 0;
    double n_ghz = 0.0;
    double n_w = 0.0;
};
GhzWBounds ghz_w_bounds(int m);

// The 2^{m-1} GHZ-type states (|0,u> + |1,~u>)/sqrt(2), u running over all
// bitstrings of the last m-1 parties; pairwise orthogonality is verified to
// 1e-12.  This family saturates the dimension bound and is perfectly
// discriminable with single-qubit measurements.
StateSet build_ghz_set(int m);

// Noiseless simulation of discriminating a GHZ-type set by measuring every
// qubit in the computational basis and decoding: outcome (b1, b2..bm) maps
// to u = (b2..bm) when b1 = 0 and to its complement when b1 = 1.  Outcome
// probabilities come from the diagonal of each state (exact Born rule, no
// sampling), so for the exact set every success probability is exactly 1.
struct LoccSimResult {
    std::vector<double> success;   // per state
    std::vector<int> decode_table; // outcome index -> state index (-1: unassigned)
};
LoccSimResult simulate_local_z_discrimination(const StateSet& set);

// For a full orthonormal basis (N must equal D): if sum_i d_ppt > D + margin
// the basis is certifiably not discriminable by any relaxed protocol.  Any
// basis with at least one entangled member trips this, because each d_ppt
// is at least 1 with the entangled members strictly above.
Verdict entangled_basis_check(const StateSet& basis, const SolverConfig& cfg = {});

}  // namespace loccbound
