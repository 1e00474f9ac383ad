#pragma once

#include "latchroma/lattice.hpp"

namespace latchroma {

// All vectors of minimal squared norm in the coset t + L (coordinates with
// respect to L's basis). With t integral the coset is L itself and the zero
// vector is excluded.
struct CosetMinima {
    Rat min_norm2;
    std::vector<QVec> vectors; // lexicographically sorted coordinate vectors
};

CosetMinima shortest_vectors_in_coset(const Lattice& l, const QVec& t);

// All lattice vectors with norm^2 <= r2 (integer coordinates, includes 0).
// Throws TooManyVertices beyond `cap` results.
std::vector<IVec> vectors_in_ball(const Lattice& l, const Rat& r2, size_t cap = 5000);

struct RelevantVectorSet {
    std::vector<IVec> vectors; // integer coordinates in L basis
    std::vector<Rat> norm2;    // parallel squared norms
    size_t count = 0;
};

inline constexpr int kDefaultRelevantDimCap = 14;

// Voronoi-relevant vectors via the 2^n - 1 cosets of L/2L: a class
// contributes +-v exactly when its shortest vectors are unique up to sign.
RelevantVectorSet relevant_vectors(const Lattice& l, int dim_cap = kDefaultRelevantDimCap);

// (lambda_1^2, all minimal vectors). Falls back to catalog metadata (with an
// empty vector list) when the dimension exceeds `enum_dim_cap` and metadata
// is present.
struct MinVectors {
    Rat norm2;
    std::vector<IVec> vectors;
    bool enumerated = true;
};

MinVectors min_vectors(const Lattice& l, int enum_dim_cap = kDefaultRelevantDimCap);

// Membership test against a relevant-vector set.
bool contains_vector(const RelevantVectorSet& s, const IVec& v);

} // namespace latchroma
