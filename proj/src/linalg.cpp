#include "loccbound/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace loccbound {

Matrix hermitize(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

EigenSystem hermitian_eig(const Matrix& h) {
    if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_eig: matrix not square");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(h));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
    EigenSystem sys{solver.eigenvalues(), solver.eigenvectors()};
    for (int c = 0; c < sys.vectors.cols(); ++c) {
        for (int r = 0; r < sys.vectors.rows(); ++r) {
            const Complex v = sys.vectors(r, c);
            if (std::abs(v) > 1e-8) {
                sys.vectors.col(c) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }
    return sys;
}

double min_eigenvalue(const Matrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(h), Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

double max_eigenvalue(const Matrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(h), Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(h.rows() - 1);
}

Matrix project_psd(const Matrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(h));
    const RealVector clipped = solver.eigenvalues().cwiseMax(0.0);
    return solver.eigenvectors() * clipped.asDiagonal() * solver.eigenvectors().adjoint();
}

Matrix clamp_spectrum(const Matrix& h, double lo, double hi) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(h));
    const RealVector clipped = solver.eigenvalues().cwiseMax(lo).cwiseMin(hi);
    return solver.eigenvectors() * clipped.asDiagonal() * solver.eigenvectors().adjoint();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vector kron(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (int i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

double frobenius_norm(const Matrix& a) { return a.norm(); }

double hs_inner(const Matrix& a, const Matrix& b) {
    return a.conjugate().cwiseProduct(b).sum().real();
}

}  // namespace loccbound
