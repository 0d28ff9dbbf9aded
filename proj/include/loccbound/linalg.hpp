#pragma once

#include <complex>

#include <Eigen/Dense>

namespace loccbound {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Hermitian part (A + A^dag) / 2.
Matrix hermitize(const Matrix& a);

struct EigenSystem {
    RealVector values;  // ascending
    Matrix vectors;     // columns, phase-fixed
};

// Eigendecomposition of a Hermitian matrix with a deterministic phase
// convention: in each eigenvector the first component of magnitude above
// 1e-8 is made real and positive.  (Columns have unit norm, so such a
// component always exists.)  Input is hermitized before factoring.
EigenSystem hermitian_eig(const Matrix& h);

double min_eigenvalue(const Matrix& h);
double max_eigenvalue(const Matrix& h);

// Nearest (Frobenius) positive semidefinite matrix: clip negative eigenvalues.
Matrix project_psd(const Matrix& h);

// Clamp the spectrum into [lo, hi].
Matrix clamp_spectrum(const Matrix& h, double lo, double hi);

// Kronecker products, party 0 = left factor most significant.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

double frobenius_norm(const Matrix& a);

// Real part of the Hilbert-Schmidt inner product <A, B> = tr(A^dag B).
double hs_inner(const Matrix& a, const Matrix& b);

}  // namespace loccbound
