#include "loccbound/ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace loccbound {

std::vector<int> partial_transpose_permutation(const MultipartiteSpace& space,
                                               std::uint32_t mask) {
    const int D = space.total_dim();
    const int m = space.party_count();
    // Split every index into its masked and unmasked contributions once.
    std::vector<int> in_mask(D, 0), out_mask(D, 0);
    for (int idx = 0; idx < D; ++idx) {
        const std::vector<int> digits = space.unpack(idx);
        for (int k = 0; k < m; ++k) {
            const int part = digits[k] * space.stride(k);
            if ((mask >> k) & 1u)
                in_mask[idx] += part;
            else
                out_mask[idx] += part;
        }
    }
    // out(r, c) = in(r', c') where the masked digits of r and c are swapped.
    std::vector<int> perm(static_cast<std::size_t>(D) * D);
    for (int c = 0; c < D; ++c)
        for (int r = 0; r < D; ++r) {
            const int rp = out_mask[r] + in_mask[c];
            const int cp = out_mask[c] + in_mask[r];
            perm[static_cast<std::size_t>(c) * D + r] = cp * D + rp;
        }
    return perm;
}

Matrix partial_transpose(const Matrix& a, const MultipartiteSpace& space, std::uint32_t mask) {
    const int D = space.total_dim();
    if (a.rows() != D || a.cols() != D)
        throw std::invalid_argument("partial_transpose: matrix shape does not match space");
    const std::vector<int> perm = partial_transpose_permutation(space, mask);
    Matrix out(D, D);
    const Complex* src = a.data();
    Complex* dst = out.data();
    for (std::size_t i = 0; i < perm.size(); ++i) dst[i] = src[perm[i]];
    return out;
}

Matrix partial_transpose(const DensityOperator& rho, const Bipartition& cut) {
    return partial_transpose(rho.matrix(), rho.space(), cut.mask());
}

Matrix partial_trace(const Matrix& a, const MultipartiteSpace& space, std::uint32_t traced_mask) {
    const int D = space.total_dim();
    if (a.rows() != D || a.cols() != D)
        throw std::invalid_argument("partial_trace: matrix shape does not match space");
    const int m = space.party_count();
    const std::uint32_t full = (1u << m) - 1u;
    const std::uint32_t kept_mask = full & ~traced_mask;
    if (kept_mask == 0) {
        Matrix out(1, 1);
        out(0, 0) = a.trace();
        return out;
    }
    const MultipartiteSpace kept = space.subspace(kept_mask);
    // Map each full index to (kept subindex, traced subindex).
    std::vector<int> kept_idx(D, 0), traced_idx(D, 0);
    for (int idx = 0; idx < D; ++idx) {
        const std::vector<int> digits = space.unpack(idx);
        int kpack = 0, tpack = 0;
        for (int k = 0; k < m; ++k) {
            if ((kept_mask >> k) & 1u)
                kpack = kpack * space.dim(k) + digits[k];
            else
                tpack = tpack * space.dim(k) + digits[k];
        }
        kept_idx[idx] = kpack;
        traced_idx[idx] = tpack;
    }
    Matrix out = Matrix::Zero(kept.total_dim(), kept.total_dim());
    for (int c = 0; c < D; ++c)
        for (int r = 0; r < D; ++r)
            if (traced_idx[r] == traced_idx[c]) out(kept_idx[r], kept_idx[c]) += a(r, c);
    return out;
}

std::vector<double> schmidt_coefficients(const PureState& psi, const Bipartition& cut) {
    const MultipartiteSpace& space = psi.space();
    const int m = space.party_count();
    const std::uint32_t full = (1u << m) - 1u;
    const MultipartiteSpace side_a = space.subspace(cut.mask());
    const MultipartiteSpace side_b = space.subspace(full & ~cut.mask());
    Matrix coeff = Matrix::Zero(side_a.total_dim(), side_b.total_dim());
    for (int idx = 0; idx < space.total_dim(); ++idx) {
        const std::vector<int> digits = space.unpack(idx);
        int apack = 0, bpack = 0;
        for (int k = 0; k < m; ++k) {
            if (cut.contains(k))
                apack = apack * space.dim(k) + digits[k];
            else
                bpack = bpack * space.dim(k) + digits[k];
        }
        coeff(apack, bpack) = psi.amplitude(idx);
    }
    Eigen::JacobiSVD<Matrix> svd(coeff);
    const RealVector sv = svd.singularValues();  // descending
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

SupportProjector support(const DensityOperator& rho, double rank_tol) {
    const EigenSystem sys = hermitian_eig(rho.matrix());
    const int D = static_cast<int>(sys.values.size());
    const double lam_max = sys.values(D - 1);
    const double cutoff = rank_tol * std::max(lam_max, 0.0);
    int rank = 0;
    for (int i = 0; i < D; ++i)
        if (sys.values(i) > cutoff) ++rank;
    if (rank == 0) throw std::runtime_error("support: operator is numerically zero");
    SupportProjector out;
    out.rank = rank;
    // Eigenvalues ascend, so the support is the trailing block.
    out.basis = sys.vectors.rightCols(rank);
    out.complement_basis = sys.vectors.leftCols(D - rank);
    out.projector = out.basis * out.basis.adjoint();
    return out;
}

double von_neumann_entropy(const DensityOperator& rho) {
    const EigenSystem sys = hermitian_eig(rho.matrix());
    double s = 0.0;
    for (int i = 0; i < sys.values.size(); ++i) {
        const double lam = sys.values(i);
        if (lam > 1e-12) s -= lam * std::log2(lam);
    }
    // An eigenvalue a rounding error above 1 would otherwise leak a tiny
    // negative total.
    return std::max(s, 0.0);
}

double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma,
                        double support_tol) {
    if (rho.space() != sigma.space())
        throw std::invalid_argument("relative_entropy: operators live on different spaces");
    const EigenSystem sig = hermitian_eig(sigma.matrix());
    const int D = static_cast<int>(sig.values.size());
    const double sig_cut = 1e-12 * std::max(sig.values(D - 1), 0.0);
    // Mass of rho outside the support of sigma.
    double outside = 0.0;
    for (int i = 0; i < D; ++i) {
        if (sig.values(i) <= sig_cut) {
            const Vector v = sig.vectors.col(i);
            outside += (v.adjoint() * rho.matrix() * v)(0, 0).real();
        }
    }
    if (outside > support_tol) return std::numeric_limits<double>::infinity();
    // tr rho log2 rho
    const EigenSystem r = hermitian_eig(rho.matrix());
    double tr_rho_log_rho = 0.0;
    for (int i = 0; i < D; ++i)
        if (r.values(i) > 1e-12) tr_rho_log_rho += r.values(i) * std::log2(r.values(i));
    // tr rho log2 sigma over sigma's support
    double tr_rho_log_sig = 0.0;
    for (int i = 0; i < D; ++i) {
        if (sig.values(i) > sig_cut) {
            const Vector v = sig.vectors.col(i);
            const double weight = (v.adjoint() * rho.matrix() * v)(0, 0).real();
            tr_rho_log_sig += weight * std::log2(sig.values(i));
        }
    }
    return std::max(0.0, tr_rho_log_rho - tr_rho_log_sig);
}

DensityOperator dephase(const DensityOperator& rho) {
    Matrix diag = Matrix::Zero(rho.dim(), rho.dim());
    diag.diagonal() = rho.matrix().diagonal().real().cast<Complex>();
    return DensityOperator(rho.space(), std::move(diag));
}

double purity(const DensityOperator& rho) { return hs_inner(rho.matrix(), rho.matrix()); }

}  // namespace loccbound
