#include "loccbound/space.hpp"

#include <stdexcept>
#include <string>

namespace loccbound {

MultipartiteSpace::MultipartiteSpace(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("space: needs at least one party");
    if (dims_.size() > 26) throw std::invalid_argument("space: at most 26 parties supported");
    for (int d : dims_) {
        if (d < 2) throw std::invalid_argument("space: every local dimension must be >= 2");
        if (total_dim_ > (1 << 26) / d)
            throw std::invalid_argument("space: total dimension too large");
        total_dim_ *= d;
    }
    strides_.assign(dims_.size(), 1);
    for (int k = static_cast<int>(dims_.size()) - 2; k >= 0; --k)
        strides_[k] = strides_[k + 1] * dims_[k + 1];
}

int MultipartiteSpace::dim(int party) const {
    if (party < 0 || party >= party_count())
        throw std::out_of_range("space: party index out of range");
    return dims_[party];
}

int MultipartiteSpace::stride(int party) const {
    if (party < 0 || party >= party_count())
        throw std::out_of_range("space: party index out of range");
    return strides_[party];
}

std::vector<int> MultipartiteSpace::unpack(int index) const {
    if (index < 0 || index >= total_dim_)
        throw std::out_of_range("space: index out of range");
    std::vector<int> digits(dims_.size());
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        digits[k] = index / strides_[k];
        index -= digits[k] * strides_[k];
    }
    return digits;
}

int MultipartiteSpace::pack(const std::vector<int>& digits) const {
    if (digits.size() != dims_.size())
        throw std::invalid_argument("space: digit count does not match party count");
    int index = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (digits[k] < 0 || digits[k] >= dims_[k])
            throw std::out_of_range("space: digit out of range for party " + std::to_string(k));
        index += digits[k] * strides_[k];
    }
    return index;
}

MultipartiteSpace MultipartiteSpace::subspace(std::uint32_t mask) const {
    std::vector<int> sub;
    for (int k = 0; k < party_count(); ++k)
        if ((mask >> k) & 1u) sub.push_back(dims_[k]);
    return MultipartiteSpace(std::move(sub));
}

Bipartition::Bipartition(const MultipartiteSpace& space, std::uint32_t party_mask) {
    const int m = space.party_count();
    const std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1u);
    party_mask &= full;
    if (party_mask == 0 || party_mask == full)
        throw std::invalid_argument("bipartition: both sides must be nonempty");
    // Canonical representative: the side containing party 0.
    if (!(party_mask & 1u)) party_mask ^= full;
    mask_ = party_mask;
    party_count_ = m;
}

std::vector<Bipartition> all_cuts(const MultipartiteSpace& space) {
    const int m = space.party_count();
    std::vector<Bipartition> out;
    if (m < 2) return out;
    const std::uint32_t full = (1u << m) - 1u;
    for (std::uint32_t mask = 1; mask < full; mask += 2)  // canonical masks contain party 0
        out.emplace_back(space, mask);
    return out;
}

std::vector<Bipartition> single_cut(const MultipartiteSpace& space) {
    std::vector<Bipartition> out;
    if (space.party_count() < 2) return out;
    out.emplace_back(space, 1u);
    return out;
}

}  // namespace loccbound
