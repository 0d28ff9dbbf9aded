#include "loccbound/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace loccbound {

PureState::PureState(MultipartiteSpace space, Vector amplitudes)
    : space_(std::move(space)), amp_(std::move(amplitudes)) {
    if (amp_.size() != space_.total_dim())
        throw std::invalid_argument("pure state: amplitude count does not match space dimension");
    const double norm = amp_.norm();
    if (std::abs(norm - 1.0) > 1e-8)
        throw std::invalid_argument("pure state: vector norm deviates from 1 by more than 1e-8");
    amp_ /= norm;
}

DensityOperator::DensityOperator(MultipartiteSpace space, Matrix rho)
    : space_(std::move(space)), rho_(std::move(rho)) {
    const int d = space_.total_dim();
    if (rho_.rows() != d || rho_.cols() != d)
        throw std::invalid_argument("density operator: matrix shape does not match space");
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("density operator: not Hermitian within 1e-10");
    const double tr = rho_.trace().real();
    if (std::abs(tr - 1.0) > 1e-8)
        throw std::invalid_argument("density operator: trace deviates from 1 by more than 1e-8");
    rho_ = hermitize(rho_) / tr;
    if (min_eigenvalue(rho_) < -1e-8)
        throw std::invalid_argument("density operator: eigenvalue below -1e-8");
}

DensityOperator::DensityOperator(const PureState& psi)
    : space_(psi.space()), rho_(psi.projector()) {}

ProductState::ProductState(MultipartiteSpace space, std::vector<Vector> locals)
    : space_(std::move(space)), locals_(std::move(locals)) {
    if (static_cast<int>(locals_.size()) != space_.party_count())
        throw std::invalid_argument("product state: need one local vector per party");
    for (int k = 0; k < space_.party_count(); ++k) {
        if (locals_[k].size() != space_.dim(k))
            throw std::invalid_argument("product state: local vector dimension mismatch at party " +
                                        std::to_string(k));
        const double norm = locals_[k].norm();
        if (std::abs(norm - 1.0) > 1e-8)
            throw std::invalid_argument("product state: local vector not normalized");
        locals_[k] /= norm;
    }
}

PureState ProductState::to_pure() const {
    Vector v = locals_[0];
    for (std::size_t k = 1; k < locals_.size(); ++k) v = kron(v, locals_[k]);
    return PureState(space_, std::move(v));
}

PureState ghz_state(int m) {
    if (m < 2) throw std::invalid_argument("ghz_state: need at least 2 parties");
    MultipartiteSpace space(std::vector<int>(m, 2));
    Vector v = Vector::Zero(space.total_dim());
    const double a = 1.0 / std::sqrt(2.0);
    v(0) = a;
    v(space.total_dim() - 1) = a;
    return PureState(std::move(space), std::move(v));
}

PureState w_state(int m) {
    if (m < 2) throw std::invalid_argument("w_state: need at least 2 parties");
    MultipartiteSpace space(std::vector<int>(m, 2));
    Vector v = Vector::Zero(space.total_dim());
    const double a = 1.0 / std::sqrt(static_cast<double>(m));
    for (int k = 0; k < m; ++k) v(space.stride(k)) = a;  // one excitation on party k
    return PureState(std::move(space), std::move(v));
}

PureState max_entangled_state(int d) {
    if (d < 2) throw std::invalid_argument("max_entangled_state: dimension must be >= 2");
    MultipartiteSpace space({d, d});
    Vector v = Vector::Zero(d * d);
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j) v(j * d + j) = a;
    return PureState(std::move(space), std::move(v));
}

std::vector<PureState> bell_basis() {
    MultipartiteSpace space({2, 2});
    const double a = 1.0 / std::sqrt(2.0);
    std::vector<PureState> out;
    Vector v = Vector::Zero(4);
    v(0) = a; v(3) = a;
    out.emplace_back(space, v);
    v.setZero(); v(0) = a; v(3) = -a;
    out.emplace_back(space, v);
    v.setZero(); v(1) = a; v(2) = a;
    out.emplace_back(space, v);
    v.setZero(); v(1) = a; v(2) = -a;
    out.emplace_back(space, v);
    return out;
}

PureState basis_state(const MultipartiteSpace& space, const std::vector<int>& digits) {
    Vector v = Vector::Zero(space.total_dim());
    v(space.pack(digits)) = 1.0;
    return PureState(space, std::move(v));
}

namespace {

// Matrix of the local operator u acting on `party`, identity elsewhere,
// without building the full Kronecker chain: the action factorizes over the
// party's digit, everything else is a block index.
Matrix embed_local(const MultipartiteSpace& space, int party, const Matrix& u) {
    const int d = space.dim(party);
    if (u.rows() != d || u.cols() != d)
        throw std::invalid_argument("apply_local_unitary: operator shape does not match party");
    const int D = space.total_dim();
    const int stride = space.stride(party);
    Matrix out = Matrix::Zero(D, D);
    for (int col = 0; col < D; ++col) {
        const int digit = (col / stride) % d;
        const int base = col - digit * stride;
        for (int row_digit = 0; row_digit < d; ++row_digit)
            out(base + row_digit * stride, col) = u(row_digit, digit);
    }
    return out;
}

}  // namespace

PureState apply_local_unitary(const PureState& psi, int party, const Matrix& u) {
    const Matrix full = embed_local(psi.space(), party, u);
    return PureState(psi.space(), full * psi.amplitudes());
}

DensityOperator apply_local_unitary(const DensityOperator& rho, int party, const Matrix& u) {
    const Matrix full = embed_local(rho.space(), party, u);
    return DensityOperator(rho.space(), full * rho.matrix() * full.adjoint());
}

Matrix pauli_x() {
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    return x;
}

Matrix pauli_z() {
    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    return z;
}

}  // namespace loccbound
