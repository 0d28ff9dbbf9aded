#include "loccbound/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace loccbound {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s ^= stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
    return a ^ splitmix64(s);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
    : engine_(mix_seed(seed, stream)) {}

double RandomStream::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // 1 - u keeps the logarithm away from zero.
    const double r = std::sqrt(-2.0 * std::log(1.0 - uniform()));
    const double theta = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

std::complex<double> RandomStream::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

Eigen::VectorXcd RandomStream::haar_vector(int d) {
    if (d < 1) throw std::invalid_argument("haar_vector: dimension must be positive");
    Eigen::VectorXcd v(d);
    for (int i = 0; i < d; ++i) v(i) = complex_gaussian();
    v /= v.norm();
    return v;
}

Eigen::MatrixXcd RandomStream::random_density(int d, int rank) {
    if (rank < 1 || rank > d) throw std::invalid_argument("random_density: rank out of range");
    Eigen::VectorXd w(rank);
    double total = 0.0;
    for (int i = 0; i < rank; ++i) {
        w(i) = uniform() + 1e-3;  // keep every component genuinely present
        total += w(i);
    }
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < rank; ++i) {
        const Eigen::VectorXcd v = haar_vector(d);
        rho += (w(i) / total) * (v * v.adjoint());
    }
    return 0.5 * (rho + rho.adjoint());
}

}  // namespace loccbound
