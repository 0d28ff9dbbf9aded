#pragma once

#include <vector>

#include "loccbound/linalg.hpp"
#include "loccbound/space.hpp"

namespace loccbound {

// Normalized state vector on a multipartite space.
class PureState {
public:
    PureState(MultipartiteSpace space, Vector amplitudes);

    const MultipartiteSpace& space() const { return space_; }
    const Vector& amplitudes() const { return amp_; }
    Complex amplitude(int index) const { return amp_(index); }

    // Rank-one projector |psi><psi|.
    Matrix projector() const { return amp_ * amp_.adjoint(); }

private:
    MultipartiteSpace space_;
    Vector amp_;
};

// Density operator: Hermitian (within 1e-10), unit trace (within 1e-8),
// eigenvalues >= -1e-8.  The stored matrix is hermitized and trace-normalized
// so downstream numerics see an exactly consistent operator.
class DensityOperator {
public:
    DensityOperator(MultipartiteSpace space, Matrix rho);
    explicit DensityOperator(const PureState& psi);

    const MultipartiteSpace& space() const { return space_; }
    const Matrix& matrix() const { return rho_; }
    int dim() const { return static_cast<int>(rho_.rows()); }

private:
    MultipartiteSpace space_;
    Matrix rho_;
};

// Fully product pure state, one unit vector per party.
class ProductState {
public:
    ProductState(MultipartiteSpace space, std::vector<Vector> locals);

    const MultipartiteSpace& space() const { return space_; }
    const Vector& local(int party) const { return locals_.at(party); }

    // Embed into the full space: the Kronecker product of the local vectors.
    PureState to_pure() const;

private:
    MultipartiteSpace space_;
    std::vector<Vector> locals_;
};

// --- state families ---------------------------------------------------------

// (|00...0> + |11...1>)/sqrt(2) on m qubits, m >= 2.
PureState ghz_state(int m);

// Single-excitation uniform superposition (|10...0> + |010...0> + ... )/sqrt(m),
// m >= 2 qubits.
PureState w_state(int m);

// (1/sqrt(d)) sum_j |jj> on two d-level parties.
PureState max_entangled_state(int d);

// The four Bell states on two qubits, in the order
// (|00>+|11>), (|00>-|11>), (|01>+|10>), (|01>-|10>), each /sqrt(2).
std::vector<PureState> bell_basis();

// Computational basis vector from per-party digits.
PureState basis_state(const MultipartiteSpace& space, const std::vector<int>& digits);

// Apply a local unitary (or any local matrix) on one party.
PureState apply_local_unitary(const PureState& psi, int party, const Matrix& u);
DensityOperator apply_local_unitary(const DensityOperator& rho, int party, const Matrix& u);

Matrix pauli_x();
Matrix pauli_z();

}  // namespace loccbound
