#pragma once

#include <cstdint>
#include <vector>

namespace loccbound {

// Tensor-product Hilbert space of m finite-dimensional parties.
//
// Index convention: party 0 is the most significant digit.  The basis vector
// |i_0 i_1 ... i_{m-1}> sits at linear index
//     sum_k i_k * prod_{l>k} d_l .
// For uniform qubit registers this is the usual big-endian bitstring order:
// |i_0 i_1 i_2> -> 4*i_0 + 2*i_1 + i_2.
class MultipartiteSpace {
public:
    explicit MultipartiteSpace(std::vector<int> dims);

    int party_count() const { return static_cast<int>(dims_.size()); }
    int dim(int party) const;
    int total_dim() const { return total_dim_; }
    const std::vector<int>& dims() const { return dims_; }

    // Digits of a linear index, one per party (party 0 first).
    std::vector<int> unpack(int index) const;
    int pack(const std::vector<int>& digits) const;

    // Stride of a party's digit in the linear index.
    int stride(int party) const;

    // Space formed by the parties selected in `mask` (bit k = party k),
    // keeping their original order.
    MultipartiteSpace subspace(std::uint32_t mask) const;

    bool operator==(const MultipartiteSpace& other) const { return dims_ == other.dims_; }
    bool operator!=(const MultipartiteSpace& other) const { return !(*this == other); }

private:
    std::vector<int> dims_;
    std::vector<int> strides_;
    int total_dim_ = 1;
};

// One bipartite cut of the parties.  The mask selects the A side (bit k set
// means party k is in A); the canonical representative always contains
// party 0, so complementary masks name the same cut.
class Bipartition {
public:
    Bipartition(const MultipartiteSpace& space, std::uint32_t party_mask);

    std::uint32_t mask() const { return mask_; }
    bool contains(int party) const { return (mask_ >> party) & 1u; }
    int party_count() const { return party_count_; }

    bool operator==(const Bipartition& other) const { return mask_ == other.mask_; }

private:
    std::uint32_t mask_ = 0;
    int party_count_ = 0;
};

// Every nontrivial bipartite cut of the space (2^{m-1} - 1 of them for m
// parties), in increasing order of the canonical mask.  Deterministic.
std::vector<Bipartition> all_cuts(const MultipartiteSpace& space);

// Just the cut separating party 0 from the rest.  Used as a cheaper,
// weaker constraint set by the solver's single-cut mode.
std::vector<Bipartition> single_cut(const MultipartiteSpace& space);

}  // namespace loccbound
