#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace loccbound {

// Deterministic random stream.  mt19937_64 has a fully specified sequence,
// but the standard library's distribution objects do not, so uniforms and
// gaussians are derived from raw engine words here.  Identical (seed, stream)
// pairs produce bit-identical sequences on every platform.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

    // Uniform double in [0, 1) with 53 random bits.
    double uniform();

    // Standard normal via Box-Muller (pairs cached).
    double gaussian();

    std::complex<double> complex_gaussian();

    // Haar-random unit vector of dimension d.
    Eigen::VectorXcd haar_vector(int d);

    // Random density matrix: mixture of `rank` Haar vectors with weights
    // drawn uniformly and normalized.
    Eigen::MatrixXcd random_density(int d, int rank);

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace loccbound
