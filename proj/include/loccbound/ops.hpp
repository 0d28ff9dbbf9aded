#pragma once

#include <vector>

#include "loccbound/linalg.hpp"
#include "loccbound/space.hpp"
#include "loccbound/states.hpp"

namespace loccbound {

// Entrywise permutation realizing the partial transpose over the parties in
// `mask`, as a map on column-major linear storage: out.data()[i] =
// in.data()[perm[i]].  The map is a self-inverse isometry of the
// Hilbert-Schmidt space, which the cone solver exploits.
std::vector<int> partial_transpose_permutation(const MultipartiteSpace& space,
                                               std::uint32_t mask);

Matrix partial_transpose(const Matrix& a, const MultipartiteSpace& space, std::uint32_t mask);
Matrix partial_transpose(const DensityOperator& rho, const Bipartition& cut);

// Trace out the parties in `traced_mask`; the result lives on
// space.subspace(~traced_mask) with the remaining parties in original order.
Matrix partial_trace(const Matrix& a, const MultipartiteSpace& space, std::uint32_t traced_mask);

// Schmidt coefficients of a pure state across a cut, descending, all >= 0,
// squares summing to 1.  Computed from the singular values of the
// coefficient matrix, so it is exact for any dimensions.
std::vector<double> schmidt_coefficients(const PureState& psi, const Bipartition& cut);

// Support (range) projector of a density operator.  Eigenvalues above
// rank_tol * lambda_max count toward the rank.
struct SupportProjector {
    Matrix projector;         // P, D x D
    Matrix basis;             // D x rank, orthonormal columns spanning the support
    Matrix complement_basis;  // D x (D - rank)
    int rank = 0;
};
SupportProjector support(const DensityOperator& rho, double rank_tol = 1e-10);

// von Neumann entropy in bits; eigenvalues below 1e-12 are treated as zero.
double von_neumann_entropy(const DensityOperator& rho);

// Relative entropy S(rho || sigma) in bits.  Returns +infinity when rho has
// more than `support_tol` of its mass outside the support of sigma.
double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma,
                        double support_tol = 1e-10);

// Diagonal part of rho in the computational product basis (a full dephasing;
// always a valid, separable density operator).
DensityOperator dephase(const DensityOperator& rho);

double purity(const DensityOperator& rho);

}  // namespace loccbound
