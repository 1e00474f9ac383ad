#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latchroma/enumerate.hpp"
#include "latchroma/lattice.hpp"

namespace latchroma {

// Labeled finite graph: no loops, symmetric adjacency, canonically sorted
// edge list.
class FiniteGraph {
public:
    FiniteGraph() = default;
    FiniteGraph(int n, std::vector<std::string> labels);

    void add_edge(int a, int b);
    void finalize(); // sorts and dedupes edges, builds adjacency

    int n_vertices() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int a, int b) const {
        return (bits_[static_cast<size_t>(a) * words_ + (b >> 6)] >> (b & 63)) & 1u;
    }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    size_t n_edges() const { return edges_.size(); }

    // adjacency row as 64-bit words, for the solvers
    const uint64_t* row_bits(int v) const { return &bits_[static_cast<size_t>(v) * words_]; }
    int words() const { return words_; }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> bits_;
};

inline constexpr size_t kDefaultVertexCap = 5000;

// Ball of the Cayley graph: all lattice points with norm^2 <= r2, adjacency
// u ~ v iff u - v is a relevant vector.
FiniteGraph cayley_ball(const Lattice& l, const RelevantVectorSet& vor, const Rat& r2,
                        size_t vertex_cap = kDefaultVertexCap);

// Finite quotient graph on L / rowspan(sub). Throws LoopInQuotient when a
// relevant vector lies in the sublattice.
FiniteGraph quotient_graph(const Lattice& l, const RelevantVectorSet& vor, const IMat& sub);

// Vertices: minimal vectors of the coset (given by an integer coordinate
// vector of sup) modulo the sublattice spanned by sub-coordinates; edges at
// the minimal nonzero pairwise distance.
FiniteGraph coset_min_vector_graph(const Lattice& sup, const IMat& sub_coords,
                                   const IVec& coset);

// Skeleton of the half cube: even-weight binary n-strings, edges at Hamming
// distance 2.
FiniteGraph half_cube_graph(int n);

std::string format_coords(const IVec& v);
std::string format_coords(const QVec& v);

} // namespace latchroma
