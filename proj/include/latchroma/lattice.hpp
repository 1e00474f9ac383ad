#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latchroma/matrix.hpp"

namespace latchroma {

// Catalog metadata carried alongside a lattice. Only the Leech entry relies
// on it (its relevant vectors are never enumerated here); everything else is
// recomputed from the basis.
struct LatticeMeta {
    std::optional<Rat> min_norm2;
    std::optional<std::vector<Rat>> relevant_norm2;
};

// A full-rank-in-its-span lattice with exact rational basis. Rows of `basis`
// are the basis vectors; `gram` = basis * basis^T; `scale` is the least
// positive rational with scale * gram integral.
struct Lattice {
    int dim = 0;
    int ambient_dim = 0;
    QMat basis; // dim x ambient_dim
    QMat gram;  // dim x dim, symmetric positive definite
    Rat scale = 1;
    std::string name;
    LatticeMeta meta;

    Rat det() const; // det(gram) > 0

    // Squared norm of the vector with the given (rational) basis coordinates.
    Rat norm2(const QVec& coords) const;
    Rat norm2(const IVec& coords) const;
    Rat inner(const IVec& a, const IVec& b) const;

    // Integral Gram used by the enumeration code: scale * gram.
    IMat scaled_gram() const;
};

// Builds a lattice from basis rows. Throws RankDeficient if the rows are
// dependent.
Lattice make_lattice(const QMat& basis, std::string name = {});

// Builds a lattice from an exact Gram matrix by constructing a rational
// basis B with B*B^T == gram (LDL plus four-square splitting of the pivots;
// the ambient dimension is at most 4*dim).
Lattice lattice_from_gram(const QMat& gram, std::string name = {});

// Lattice spanned by (possibly dependent, possibly too many) generator rows.
Lattice lattice_from_generators(const QMat& rows, std::string name = {});

// Dual lattice: basis gram^{-1} * basis, gram^{-1}. Involutive exactly.
Lattice dual(const Lattice& l);

// Orthogonal (block) sum.
Lattice orthogonal_sum(const Lattice& a, const Lattice& b);

// Coordinates of sub's basis vectors with respect to sup's basis. Throws
// BadInput if sub is not a sublattice of sup (non-integral coordinates) or
// the spans differ in ambient dimension.
IMat sublattice_coords(const Lattice& sup, const Lattice& sub);

// Rescales every basis vector by the positive rational factor.
Lattice rescale(const Lattice& l, const Rat& factor);

} // namespace latchroma
