#pragma once

#include "latchroma/lattice.hpp"

namespace latchroma {

struct LllResult {
    Lattice lattice;  // same lattice, reduced basis
    IMat transform;   // reduced basis = transform * original basis, det +-1
};

// Exact-rational LLL with delta = 3/4.
LllResult lll_reduce(const Lattice& l);

// Works on the Gram matrix alone; returns the unimodular transform U such
// that U * gram * U^T is the Gram of the reduced basis.
IMat lll_transform(const QMat& gram);

} // namespace latchroma
