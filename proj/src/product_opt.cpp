#include "loccbound/product_opt.hpp"

#include <cmath>
#include <stdexcept>

#include "loccbound/rng.hpp"

namespace loccbound {

bool ProductOptResult::all_converged() const {
    for (bool c : restart_converged)
        if (!c) return false;
    return true;
}

namespace {

// Weight of each full-space index from the local vectors of every party
// except `skip`: w_r = prod_{k != skip} locals[k][digit_k(r)].
Vector partial_weights(const MultipartiteSpace& space, const std::vector<Vector>& locals,
                       int skip) {
    const int D = space.total_dim();
    Vector w = Vector::Ones(D);
    for (int idx = 0; idx < D; ++idx) {
        const std::vector<int> digits = space.unpack(idx);
        for (int k = 0; k < space.party_count(); ++k)
            if (k != skip) w(idx) *= locals[k](digits[k]);
    }
    return w;
}

// Quadratic form B on party `k`'s local space so that replacing phi_k by x
// gives overlap x^dag B x.
Matrix contracted_form(const Matrix& rho, const MultipartiteSpace& space,
                       const std::vector<Vector>& locals, int k) {
    const int D = space.total_dim();
    const int d = space.dim(k);
    const int stride = space.stride(k);
    const Vector w = partial_weights(space, locals, k);
    Matrix b = Matrix::Zero(d, d);
    for (int c = 0; c < D; ++c) {
        const int cd = (c / stride) % d;
        for (int r = 0; r < D; ++r) {
            const int rd = (r / stride) % d;
            b(rd, cd) += std::conj(w(r)) * rho(r, c) * w(c);
        }
    }
    return hermitize(b);
}

double full_overlap(const Matrix& rho, const ProductState& phi) {
    const Vector v = phi.to_pure().amplitudes();
    return (v.adjoint() * rho * v)(0, 0).real();
}

}  // namespace

ProductOptResult max_product_overlap(const DensityOperator& rho, const ProductOptConfig& cfg) {
    if (cfg.restarts < 1) throw std::invalid_argument("max_product_overlap: restarts must be >= 1");
    if (cfg.max_sweeps < 1) throw std::invalid_argument("max_product_overlap: max_sweeps must be >= 1");
    const MultipartiteSpace& space = rho.space();
    const int m = space.party_count();

    double best = -1.0;
    std::vector<Vector> best_locals;
    std::vector<int> sweep_counts;
    std::vector<bool> converged_flags;

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        RandomStream rng(cfg.seed, static_cast<std::uint64_t>(restart));
        std::vector<Vector> locals;
        locals.reserve(m);
        for (int k = 0; k < m; ++k) locals.push_back(rng.haar_vector(space.dim(k)));

        double overlap = 0.0;
        {
            const Vector w = partial_weights(space, locals, -1);
            overlap = (w.adjoint() * rho.matrix() * w)(0, 0).real();
        }
        int sweeps = 0;
        bool converged = false;
        while (sweeps < cfg.max_sweeps) {
            const double before = overlap;
            for (int k = 0; k < m; ++k) {
                const Matrix b = contracted_form(rho.matrix(), space, locals, k);
                const EigenSystem sys = hermitian_eig(b);
                const double top = sys.values(sys.values.size() - 1);
                // Each replacement maximizes a quadratic form, so the overlap
                // cannot drop; a real decrease means a broken contraction.
                if (top < overlap - 1e-12 * (1.0 + std::abs(overlap)))
                    throw std::logic_error("max_product_overlap: overlap decreased during update");
                locals[k] = sys.vectors.col(sys.values.size() - 1);
                overlap = top;
            }
            ++sweeps;
            if (overlap - before <= cfg.convergence_tol) {
                converged = true;
                break;
            }
        }
        sweep_counts.push_back(sweeps);
        converged_flags.push_back(converged);
        if (overlap > best) {
            best = overlap;
            best_locals = locals;
        }
    }

    ProductState argmax(space, std::move(best_locals));
    // Report the overlap recomputed from the returned state so the pair is
    // exactly consistent.
    const double recomputed = full_overlap(rho.matrix(), argmax);
    return ProductOptResult{recomputed, std::move(argmax), std::move(sweep_counts),
                            std::move(converged_flags)};
}

double geometric_measure_upper(const DensityOperator& rho, const ProductOptConfig& cfg) {
    const double overlap = max_product_overlap(rho, cfg).best_overlap;
    if (overlap < 1e-300)
        throw std::runtime_error("geometric_measure_upper: product overlap vanished");
    return std::max(0.0, -std::log2(std::min(overlap, 1.0)));
}

}  // namespace loccbound
