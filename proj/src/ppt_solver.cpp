#include "loccbound/ppt_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace loccbound {

std::string to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::converged: return "converged";
        case SolveStatus::max_iterations: return "max_iterations";
        case SolveStatus::infeasible: return "infeasible";
    }
    return "unknown";
}

double SolverResult::max_residual() const {
    double worst = 0.0;
    for (double r : residuals) worst = std::max(worst, r);
    return worst;
}

namespace {

std::vector<Bipartition> cuts_for(const MultipartiteSpace& space, CutMode mode) {
    return mode == CutMode::all_cuts ? all_cuts(space) : single_cut(space);
}

Matrix permute_entries(const Matrix& a, const std::vector<int>& perm) {
    Matrix out(a.rows(), a.cols());
    const Complex* src = a.data();
    Complex* dst = out.data();
    for (std::size_t i = 0; i < perm.size(); ++i) dst[i] = src[perm[i]];
    return out;
}

// One spectral constraint seen through a frame.  The frame maps the solver
// variable X into the cone's space: optionally conjugate by the embedding
// isometry (X lives on a subspace), then optionally permute entries (partial
// transpose).  Both pieces are Hilbert-Schmidt isometries and the partial
// transpose is its own inverse, which keeps the consensus X-update a plain
// average.  A nonzero shift B turns the cone into {W : W + B in K}.
struct ConeOp {
    const std::vector<int>* perm = nullptr;
    bool embed = false;
    bool interval = false;  // project onto 0 <= . <= 1 instead of PSD
    Matrix shift;           // zero-size when absent
    int frame_dim = 0;
};

struct AdmmSpec {
    int n = 0;              // variable dimension
    Matrix objective;       // minimize <objective, X>
    std::vector<ConeOp> cones;
    Matrix embed;           // D x n isometry, zero-size when unused
    bool unit_trace = false;
    Matrix x0;
};

Matrix cone_apply(const AdmmSpec& s, const ConeOp& c, const Matrix& x) {
    Matrix full = c.embed ? Matrix(s.embed * x * s.embed.adjoint()) : x;
    if (c.perm) full = permute_entries(full, *c.perm);
    return full;
}

Matrix cone_adjoint(const AdmmSpec& s, const ConeOp& c, const Matrix& w) {
    Matrix full = c.perm ? permute_entries(w, *c.perm) : w;
    if (c.embed) return s.embed.adjoint() * full * s.embed;
    return full;
}

Matrix cone_project(const ConeOp& c, const Matrix& v) {
    Matrix w = (c.shift.size() != 0) ? Matrix(v + c.shift) : v;
    w = c.interval ? clamp_spectrum(w, 0.0, 1.0) : project_psd(w);
    if (c.shift.size() != 0) w -= c.shift;
    return w;
}

struct AdmmOut {
    Matrix x;
    int iterations = 0;
    bool hit_tol = false;
};

// Consensus ADMM over the cones: split Z_j = T_j(X) with scaled duals U_j,
// over-relaxation 1.6, and deterministic residual balancing of the penalty.
// All updates are spectral projections, so every step is an eigensolve and
// the iteration is exactly reproducible.
AdmmOut run_admm(const AdmmSpec& s, const SolverConfig& cfg) {
    const int J = static_cast<int>(s.cones.size());
    if (J == 0) throw std::logic_error("run_admm: no constraints");
    const double alpha = 1.6;
    const double stop = std::max(0.01 * cfg.tol, 1e-11);
    double sigma = 1.0;

    Matrix X = s.x0;
    std::vector<Matrix> Z, U;
    Z.reserve(J);
    U.reserve(J);
    for (const ConeOp& c : s.cones) {
        Z.push_back(cone_apply(s, c, X));
        U.push_back(Matrix::Zero(c.frame_dim, c.frame_dim));
    }

    for (int it = 1; it <= cfg.max_iter; ++it) {
        Matrix acc = Matrix::Zero(s.n, s.n);
        for (int j = 0; j < J; ++j) acc += cone_adjoint(s, s.cones[j], Z[j] - U[j]);
        X = acc / J - s.objective / (J * sigma);
        X = hermitize(X);
        if (s.unit_trace)
            X.diagonal().array() += Complex((1.0 - X.trace().real()) / s.n);

        double primal2 = 0.0;
        Matrix dual_acc = Matrix::Zero(s.n, s.n);
        for (int j = 0; j < J; ++j) {
            const Matrix tx = cone_apply(s, s.cones[j], X);
            const Matrix relaxed = alpha * tx + (1.0 - alpha) * Z[j];
            Matrix z_new = cone_project(s.cones[j], relaxed + U[j]);
            U[j] += relaxed - z_new;
            dual_acc += cone_adjoint(s, s.cones[j], z_new - Z[j]);
            primal2 += (tx - z_new).squaredNorm();
            Z[j] = std::move(z_new);
        }

        if (it % 25 == 0) {
            const double rp = std::sqrt(primal2) / (1.0 + X.norm());
            const double rd = sigma * dual_acc.norm() / (1.0 + s.objective.norm());
            if (rp < stop && rd < stop) return {std::move(X), it, true};
            if (it % 100 == 0) {
                if (rp > 10.0 * rd && sigma < 1e4) {
                    sigma *= 2.0;
                    for (Matrix& u : U) u *= 0.5;
                } else if (rd > 10.0 * rp && sigma > 1e-4) {
                    sigma /= 2.0;
                    for (Matrix& u : U) u *= 2.0;
                }
            }
        }
    }
    return {std::move(X), cfg.max_iter, false};
}

double psd_violation(const Matrix& h) { return std::max(0.0, -min_eigenvalue(h)); }

double interval_violation(const Matrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(h), Eigen::EigenvaluesOnly);
    const double lo = solver.eigenvalues()(0);
    const double hi = solver.eigenvalues()(h.rows() - 1);
    return std::max({0.0, -lo, hi - 1.0});
}

SolveStatus finish_status(const AdmmOut& out, const SolverResult& res, double tol) {
    if (!out.hit_tol) return SolveStatus::max_iterations;
    for (double r : res.residuals)
        if (r > tol) return SolveStatus::max_iterations;
    return SolveStatus::converged;
}

}  // namespace

bool is_ppt(const DensityOperator& rho, double tol, CutMode mode) {
    for (const Bipartition& cut : cuts_for(rho.space(), mode))
        if (min_eigenvalue(partial_transpose(rho, cut)) < -tol) return false;
    return true;
}

SolverResult max_ppt_overlap(const DensityOperator& rho, const SolverConfig& cfg) {
    const MultipartiteSpace& space = rho.space();
    const int D = rho.dim();
    const std::vector<Bipartition> cuts = cuts_for(space, cfg.cuts);
    std::vector<std::vector<int>> perms;
    perms.reserve(cuts.size());
    for (const Bipartition& cut : cuts)
        perms.push_back(partial_transpose_permutation(space, cut.mask()));

    AdmmSpec s;
    s.n = D;
    s.objective = -rho.matrix();
    s.unit_trace = true;
    s.x0 = Matrix::Identity(D, D) / D;
    s.cones.push_back({nullptr, false, false, Matrix(), D});
    for (const std::vector<int>& p : perms) s.cones.push_back({&p, false, false, Matrix(), D});

    const AdmmOut out = run_admm(s, cfg);

    // Exact feasibility: re-project onto the PSD cone, renormalize, then mix
    // toward the maximally mixed state far enough to absorb any remaining
    // partial-transpose negativity.  The mixed state is PPT-invariant, so the
    // result is feasible and the value a certified lower bound.
    Matrix omega = project_psd(out.x);
    const double tr = omega.trace().real();
    omega = (tr > 1e-12) ? Matrix(omega / tr) : Matrix(Matrix::Identity(D, D) / D);
    double neg = 0.0;
    for (const std::vector<int>& p : perms)
        neg = std::max(neg, psd_violation(permute_entries(omega, p)));
    if (neg > 0.0) {
        const double nu = neg + 1e-14;
        const double gamma = nu * D / (1.0 + nu * D);
        omega = (1.0 - gamma) * omega + gamma * Matrix::Identity(D, D) / D;
    }

    SolverResult res;
    res.certificate = omega;
    res.value = hs_inner(rho.matrix(), omega);
    res.iterations = out.iterations;
    res.residuals.push_back(std::abs(omega.trace().real() - 1.0));
    res.residuals.push_back(psd_violation(omega));
    for (const std::vector<int>& p : perms)
        res.residuals.push_back(psd_violation(permute_entries(omega, p)));
    res.status = finish_status(out, res, cfg.tol);
    return res;
}

SolverResult global_robustness_ppt(const DensityOperator& rho, const SolverConfig& cfg) {
    const MultipartiteSpace& space = rho.space();
    const int D = rho.dim();
    const std::vector<Bipartition> cuts = cuts_for(space, cfg.cuts);
    std::vector<std::vector<int>> perms;
    std::vector<Matrix> shifted;  // partial transposes of rho
    for (const Bipartition& cut : cuts) {
        perms.push_back(partial_transpose_permutation(space, cut.mask()));
        shifted.push_back(permute_entries(rho.matrix(), perms.back()));
    }

    double base_neg = 0.0;
    for (const Matrix& pt : shifted) base_neg = std::max(base_neg, psd_violation(pt));
    if (base_neg <= 1e-12) {
        // Already PPT across every cut: nothing to add.
        SolverResult res;
        res.value = 0.0;
        res.certificate = Matrix::Zero(D, D);
        res.status = SolveStatus::converged;
        res.residuals.push_back(0.0);
        res.residuals.push_back(0.0);
        for (const Matrix& pt : shifted) res.residuals.push_back(psd_violation(pt));
        res.iterations = 0;
        return res;
    }

    AdmmSpec s;
    s.n = D;
    s.objective = Matrix::Identity(D, D);
    s.x0 = Matrix::Zero(D, D);
    s.cones.push_back({nullptr, false, false, Matrix(), D});
    for (std::size_t j = 0; j < perms.size(); ++j)
        s.cones.push_back({&perms[j], false, false, shifted[j], D});

    const AdmmOut out = run_admm(s, cfg);

    // Exact feasibility: clip Y to PSD, then pad with enough identity to
    // close any remaining partial-transpose gap (the identity is its own
    // partial transpose).  Gives a certified upper bound.
    Matrix y = project_psd(out.x);
    double gap = 0.0;
    for (std::size_t j = 0; j < perms.size(); ++j)
        gap = std::max(gap, psd_violation(shifted[j] + permute_entries(y, perms[j])));
    if (gap > 0.0) y += (gap + 1e-14) * Matrix::Identity(D, D);

    SolverResult res;
    res.certificate = y;
    res.value = y.trace().real();
    res.iterations = out.iterations;
    res.residuals.push_back(0.0);
    res.residuals.push_back(psd_violation(y));
    for (std::size_t j = 0; j < perms.size(); ++j)
        res.residuals.push_back(psd_violation(shifted[j] + permute_entries(y, perms[j])));
    res.status = finish_status(out, res, cfg.tol);
    return res;
}

SolverResult discrimination_cost_ppt(const DensityOperator& rho, const SolverConfig& cfg) {
    const MultipartiteSpace& space = rho.space();
    const int D = rho.dim();
    const std::vector<Bipartition> cuts = cuts_for(space, cfg.cuts);
    const SupportProjector sup = support(rho);
    const int rank = sup.rank;
    const int n = D - rank;

    // tr(rho M) = 1 with M <= 1 forces M to equal the identity on the
    // support of rho; only the complement block remains free.
    if (n == 0) {
        SolverResult res;
        res.value = static_cast<double>(D);
        res.certificate = Matrix::Identity(D, D);
        res.status = SolveStatus::converged;
        res.residuals.assign(2 + cuts.size(), 0.0);
        res.iterations = 0;
        return res;
    }

    std::vector<std::vector<int>> perms;
    std::vector<Matrix> shifted;  // partial transposes of the support projector
    for (const Bipartition& cut : cuts) {
        perms.push_back(partial_transpose_permutation(space, cut.mask()));
        shifted.push_back(permute_entries(sup.projector, perms.back()));
    }

    AdmmSpec s;
    s.n = n;
    s.objective = Matrix::Identity(n, n);
    s.embed = sup.complement_basis;
    s.x0 = Matrix::Zero(n, n);
    s.cones.push_back({nullptr, false, true, Matrix(), n});  // 0 <= Q <= 1
    for (std::size_t j = 0; j < perms.size(); ++j)
        s.cones.push_back({&perms[j], true, false, shifted[j], D});

    const AdmmOut out = run_admm(s, cfg);

    // Exact feasibility: clamp the block into [0, 1], then mix toward the
    // full element M = 1 (whose partial transposes are the identity) far
    // enough to absorb any remaining negativity.  Certified upper bound.
    Matrix q = clamp_spectrum(out.x, 0.0, 1.0);
    Matrix element = hermitize(sup.projector + s.embed * q * s.embed.adjoint());
    double neg = 0.0;
    for (const std::vector<int>& p : perms)
        neg = std::max(neg, psd_violation(permute_entries(element, p)));
    if (neg > 0.0) {
        const double nu = neg + 1e-14;
        const double gamma = nu / (1.0 + nu);
        q = (1.0 - gamma) * q + gamma * Matrix::Identity(n, n);
        element = hermitize(sup.projector + s.embed * q * s.embed.adjoint());
    }

    SolverResult res;
    res.certificate = element;
    res.value = element.trace().real();
    res.iterations = out.iterations;
    res.residuals.push_back(std::abs(hs_inner(rho.matrix(), element) - 1.0));
    res.residuals.push_back(interval_violation(element));
    for (const std::vector<int>& p : perms)
        res.residuals.push_back(psd_violation(permute_entries(element, p)));
    res.status = finish_status(out, res, cfg.tol);
    return res;
}

}  // namespace loccbound
