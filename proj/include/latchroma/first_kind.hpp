#pragma once

#include "latchroma/bounds.hpp"
#include "latchroma/graph.hpp"

namespace latchroma {

// Obtuse superbasis v_0..v_n: v_1..v_n a basis, sum of all n+1 vectors zero,
// pairwise inner products <= 0 (Selling parameters).
struct Superbasis {
    QMat vectors;  // (n+1) x ambient, row 0 = v_0
    QMat selling;  // (n+1) x (n+1) inner products
    bool strictly_obtuse = false;

    int n() const { return vectors.rows() - 1; }

    // Lattice spanned by v_1..v_n.
    Lattice span_lattice() const;
};

// Validates the superbasis conditions; throws SumNotZero / NotABasis /
// PositiveInnerProduct with the offending pair.
Superbasis check_obtuse_superbasis(const QMat& vectors);

// Graph on {0..n} with an edge whenever v_i . v_j < 0.
FiniteGraph delaunay_graph(const Superbasis& sb);

// Relevant vectors as v_I over the minimal cuts of the Delaunay graph
// (both I and its complement induce connected subgraphs). Coordinates are
// with respect to the basis v_1..v_n. Throws DisconnectedInput.
RelevantVectorSet relevant_from_cuts(const Superbasis& sb);

// Clique of size sigma (longest Delaunay cycle) in the Cayley graph,
// following the connector construction; returns the lattice points in basis
// coordinates. Every pairwise difference is checked against
// relevant_from_cuts. Throws NoCycle on acyclic graphs.
std::vector<IVec> cycle_clique_lower_bound(const Superbasis& sb);

// The linear mod-(n+1) coloring certificate; always accepted.
QuotientColoring mod_coloring(const Superbasis& sb);

struct BiconnectedSplit {
    std::vector<Superbasis> blocks; // one superbasis per biconnected component
    std::vector<std::vector<int>> block_vertices;
    int upper_bound = 0; // max over blocks of the block's superbasis size
};

BiconnectedSplit biconnected_split(const Superbasis& sb);

// Realizes a connected graph as a first-kind lattice: unit-weight Selling
// parameters on the edges. Handy for the worked examples and tests.
Superbasis superbasis_from_graph(int n_vertices, const std::vector<std::pair<int, int>>& edges);

} // namespace latchroma
