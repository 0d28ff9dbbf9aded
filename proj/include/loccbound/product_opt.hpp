#pragma once

#include <cstdint>
#include <vector>

#include "loccbound/states.hpp"

namespace loccbound {

struct ProductOptConfig {
    int restarts = 32;
    int max_sweeps = 500;
    double convergence_tol = 1e-12;
    std::uint64_t seed = 1;
};

struct ProductOptResult {
    double best_overlap = 0.0;  // recomputed from argmax, so the two always agree
    ProductState argmax;
    std::vector<int> sweep_counts;        // per restart
    std::vector<bool> restart_converged;  // improvement fell below tol before the sweep cap

    bool all_converged() const;
};

// Largest overlap <phi|rho|phi> over fully product states, by alternating
// single-party updates: fixing all parties but one reduces the overlap to a
// quadratic form whose top eigenvector is the optimal replacement, so every
// update increases the overlap (enforced; a decrease beyond rounding throws).
// Restarts draw Haar-random product states from stream (seed, restart
// index), making runs with equal seeds bit-identical.  The result is a
// certified lower bound on the true product-state maximum.
ProductOptResult max_product_overlap(const DensityOperator& rho, const ProductOptConfig& cfg = {});

// -log2 of the best product overlap, clamped at 0; an upper bound on the
// geometric entanglement measure.  Throws if the overlap vanishes.
double geometric_measure_upper(const DensityOperator& rho, const ProductOptConfig& cfg = {});

}  // namespace loccbound
