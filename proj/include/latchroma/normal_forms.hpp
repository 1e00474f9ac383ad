#pragma once

#include "latchroma/matrix.hpp"

namespace latchroma {

// Column-style Hermite normal form: H = M * U with U unimodular, H lower
// triangular with positive pivots and reduced entries left of each pivot.
struct HnfResult {
    IMat h;
    IMat u; // M * u == h
};

HnfResult hnf(const IMat& m);

// Row-style Hermite form of the row span: R = V * M, V unimodular. The
// returned matrix has its zero rows dropped, so it is a basis of the row
// lattice of M.
IMat row_hnf_basis(const IMat& m);

// Smith normal form: S = U * M * V with U, V unimodular and
// S = diag(d1, ..., dr), d1 | d2 | ... | dr, di > 0.
struct SnfResult {
    IMat s;
    IMat u;
    IMat v;
    std::vector<Int> divisors; // nonzero diagonal entries
};

SnfResult snf(const IMat& m);

} // namespace latchroma
