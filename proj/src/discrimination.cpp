#include "loccbound/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace loccbound {

void StateSet::add(std::string label, DensityOperator state) {
    if (state.space() != space)
        throw std::invalid_argument("state set: state lives on a different space");
    labels.push_back(std::move(label));
    states.push_back(std::move(state));
}

Povm::Povm(std::vector<Matrix> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("povm: needs at least one element");
    const auto rows = elements_.front().rows();
    for (const Matrix& e : elements_) {
        if (e.rows() != rows || e.cols() != rows)
            throw std::invalid_argument("povm: elements must be square and equally sized");
        if ((e - e.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
            throw std::invalid_argument("povm: element not Hermitian within 1e-10");
    }
}

PovmConditionReport povm_conditions_check(const Povm& povm, const StateSet& set, double tol,
                                          CutMode mode) {
    if (povm.size() != set.size())
        throw std::invalid_argument("povm_conditions_check: need one element per state");
    const int D = set.space.total_dim();
    if (povm.elements().front().rows() != D)
        throw std::invalid_argument("povm_conditions_check: element dimension mismatch");

    PovmConditionReport report;
    report.tol = tol;

    Matrix sum = Matrix::Zero(D, D);
    for (const Matrix& e : povm.elements()) sum += e;
    report.completeness_dev = (sum - Matrix::Identity(D, D)).cwiseAbs().maxCoeff();

    const std::vector<Bipartition> cuts =
        (mode == CutMode::all_cuts) ? all_cuts(set.space) : single_cut(set.space);
    for (int i = 0; i < povm.size(); ++i) {
        const Matrix& e = povm.elements()[i];
        Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(e), Eigen::EigenvaluesOnly);
        report.bound_dev = std::max({report.bound_dev, -eig.eigenvalues()(0),
                                     eig.eigenvalues()(D - 1) - 1.0});
        report.detection_dev = std::max(
            report.detection_dev, std::abs(hs_inner(set.states[i].matrix(), e) - 1.0));
        for (const Bipartition& cut : cuts) {
            const double neg = -min_eigenvalue(partial_transpose(e, set.space, cut.mask()));
            report.ppt_dev = std::max(report.ppt_dev, neg);
        }
    }
    report.bound_dev = std::max(report.bound_dev, 0.0);
    report.ppt_dev = std::max(report.ppt_dev, 0.0);
    return report;
}

std::string to_string(Verdict verdict) {
    return verdict == Verdict::provably_not_discriminable ? "provably_not_discriminable"
                                                          : "possibly_discriminable";
}

bool BoundReport::all_converged() const {
    for (SolveStatus s : cost_status)
        if (s != SolveStatus::converged) return false;
    return true;
}

BoundReport make_bound_report(std::vector<double> costs, std::vector<SolveStatus> statuses,
                              int total_dim, double tol) {
    BoundReport report;
    report.total_dim = total_dim;
    report.state_count = static_cast<int>(costs.size());
    report.costs = std::move(costs);
    report.cost_status = std::move(statuses);
    for (double c : report.costs) report.cost_sum += c;
    report.margin = report.state_count * tol;
    report.verdict = (report.cost_sum > total_dim + report.margin)
                         ? Verdict::provably_not_discriminable
                         : Verdict::possibly_discriminable;
    report.saturated = std::abs(report.cost_sum - total_dim) <= report.state_count * 1e-3;
    return report;
}

BoundReport dimension_bound_check(const StateSet& set, const SolverConfig& cfg) {
    std::vector<double> costs;
    std::vector<SolveStatus> statuses;
    for (const DensityOperator& rho : set.states) {
        const SolverResult res = discrimination_cost_ppt(rho, cfg);
        costs.push_back(res.value);
        statuses.push_back(res.status);
    }
    return make_bound_report(std::move(costs), std::move(statuses), set.space.total_dim(),
                             cfg.tol);
}

long floored_count(double raw) {
    const double nearest = std::round(raw);
    if (std::abs(raw - nearest) <= 1e-4) return static_cast<long>(std::llround(nearest));
    return static_cast<long>(std::floor(raw));
}

CountBounds state_count_bounds(const std::vector<MeasureRecord>& records, int total_dim) {
    if (records.empty()) throw std::invalid_argument("state_count_bounds: empty record list");
    double cost = 0.0, robustness = 0.0, entropy_proxy = 0.0, geometric = 0.0;
    for (const MeasureRecord& rec : records) {
        cost += rec.d_ppt;
        robustness += rec.r_ppt;
        entropy_proxy += std::exp2(rec.er_lower + rec.entropy);
        geometric += std::exp2(rec.g_lower);
    }
    const double n = static_cast<double>(records.size());
    CountBounds out;
    out.raw_cost = total_dim * n / cost;
    out.raw_robustness = total_dim * n / robustness;
    out.raw_entropy_proxy = total_dim * n / entropy_proxy;
    out.raw_geometric = total_dim * n / geometric;
    out.n_cost = floored_count(out.raw_cost);
    out.n_robustness = floored_count(out.raw_robustness);
    out.n_entropy_proxy = floored_count(out.raw_entropy_proxy);
    out.n_geometric = floored_count(out.raw_geometric);
    return out;
}

double bipartite_bound(const std::vector<double>& schmidt, int d1, int d2) {
    if (d1 < 2 || d2 < 2) throw std::invalid_argument("bipartite_bound: dimensions must be >= 2");
    if (schmidt.empty() || static_cast<int>(schmidt.size()) > std::min(d1, d2))
        throw std::invalid_argument("bipartite_bound: wrong number of Schmidt coefficients");
    double sum = 0.0, sum2 = 0.0;
    for (double a : schmidt) {
        if (a < -1e-12) throw std::invalid_argument("bipartite_bound: negative coefficient");
        sum += a;
        sum2 += a * a;
    }
    if (std::abs(sum2 - 1.0) > 1e-6)
        throw std::invalid_argument("bipartite_bound: squared coefficients must sum to 1");
    return static_cast<double>(d1) * d2 / (sum * sum);
}

GhzWBounds ghz_w_bounds(int m) {
    if (m < 2) throw std::invalid_argument("ghz_w_bounds: need m >= 2");
    GhzWBounds out;
    out.m = m;
    out.n_ghz = std::exp2(m - 1);
    out.n_w = std::exp2(m) * std::pow((m - 1.0) / m, m - 1);
    if (m >= 3 && std::floor(out.n_w) >= out.n_ghz)
        throw std::logic_error("ghz_w_bounds: W-family bound must floor below the GHZ bound");
    return out;
}

namespace {

std::string bits_label(int u, int width) {
    std::string s(width, '0');
    for (int j = 0; j < width; ++j)
        if ((u >> (width - 1 - j)) & 1) s[j] = '1';
    return s;
}

}  // namespace

StateSet build_ghz_set(int m) {
    if (m < 2 || m > 20) throw std::invalid_argument("build_ghz_set: need 2 <= m <= 20");
    MultipartiteSpace space(std::vector<int>(m, 2));
    const int D = space.total_dim();
    const int half = D / 2;
    StateSet set{space, {}, {}};
    const double a = 1.0 / std::sqrt(2.0);
    for (int u = 0; u < half; ++u) {
        // Flipping the last m-1 qubits of the GHZ state by the pattern u
        // gives (|0, u> + |1, ~u>)/sqrt(2); with qubit 0 most significant the
        // two basis indices are u and D - 1 - u.
        Vector v = Vector::Zero(D);
        v(u) = a;
        v(D - 1 - u) = a;
        set.add("u" + bits_label(u, m - 1), DensityOperator(PureState(space, std::move(v))));
    }
    // The construction is orthonormal by design; verify it.
    for (int i = 0; i < set.size(); ++i)
        for (int j = i + 1; j < set.size(); ++j)
            if (std::abs(hs_inner(set.states[i].matrix(), set.states[j].matrix())) > 1e-12)
                throw std::logic_error("build_ghz_set: constructed states not orthogonal");
    return set;
}

LoccSimResult simulate_local_z_discrimination(const StateSet& set) {
    const MultipartiteSpace& space = set.space;
    for (int d : space.dims())
        if (d != 2)
            throw std::invalid_argument("simulate_local_z_discrimination: qubit registers only");
    const int D = space.total_dim();
    const int half = D / 2;

    // Identify each state's pattern u from its diagonal support, which must
    // be {(0,u), (1,~u)} with weight 1/2 each.
    std::map<int, int> pattern_to_state;
    for (int i = 0; i < set.size(); ++i) {
        const Matrix& rho = set.states[i].matrix();
        int u = -1;
        for (int idx = 0; idx < D; ++idx) {
            const double p = rho(idx, idx).real();
            if (std::abs(p - 0.5) <= 1e-9) {
                const int pattern = idx < half ? idx : D - 1 - idx;
                if (u == -1)
                    u = pattern;
                else if (u != pattern)
                    throw std::invalid_argument(
                        "simulate_local_z_discrimination: state is not GHZ-type");
            } else if (std::abs(p) > 1e-9) {
                throw std::invalid_argument(
                    "simulate_local_z_discrimination: diagonal weight off the GHZ pattern");
            }
        }
        if (u < 0)
            throw std::invalid_argument("simulate_local_z_discrimination: state is not GHZ-type");
        if (!pattern_to_state.emplace(u, i).second)
            throw std::invalid_argument("simulate_local_z_discrimination: duplicate pattern");
    }

    // Decode every outcome: first bit 0 keeps the trailing pattern, first
    // bit 1 complements it.
    LoccSimResult result;
    result.decode_table.assign(D, -1);
    for (int outcome = 0; outcome < D; ++outcome) {
        const int u = outcome < half ? outcome : (D - 1 - outcome);
        const auto it = pattern_to_state.find(u);
        if (it != pattern_to_state.end()) result.decode_table[outcome] = it->second;
    }

    result.success.assign(set.size(), 0.0);
    for (int i = 0; i < set.size(); ++i) {
        const Matrix& rho = set.states[i].matrix();
        double p = 0.0;
        for (int outcome = 0; outcome < D; ++outcome)
            if (result.decode_table[outcome] == i) p += rho(outcome, outcome).real();
        result.success[i] = p;
    }
    return result;
}

Verdict entangled_basis_check(const StateSet& basis, const SolverConfig& cfg) {
    const int D = basis.space.total_dim();
    if (basis.size() != D)
        throw std::invalid_argument("entangled_basis_check: need exactly dim-many states");
    for (int i = 0; i < basis.size(); ++i) {
        if (std::abs(purity(basis.states[i]) - 1.0) > 1e-8)
            throw std::invalid_argument("entangled_basis_check: basis members must be pure");
        for (int j = i + 1; j < basis.size(); ++j)
            if (std::abs(hs_inner(basis.states[i].matrix(), basis.states[j].matrix())) > 1e-8)
                throw std::invalid_argument("entangled_basis_check: basis not orthogonal");
    }
    return dimension_bound_check(basis, cfg).verdict;
}

}  // namespace loccbound
