#pragma once

#include "latchroma/matrix.hpp"
#include "latchroma/normal_forms.hpp"

namespace latchroma {

// Finite quotient Z^n / rowspan(sub) for a nonsingular integer matrix sub
// (rows are sublattice generators in lattice coordinates). Representatives
// are enumerated in mixed-radix order over the Smith divisors.
class QuotientGroup {
public:
    explicit QuotientGroup(const IMat& sub);

    const Int& index() const { return index_; }
    const std::vector<Int>& elementary_divisors() const { return divisors_; }
    int dim() const { return n_; }

    // Canonical representative of the coset of x.
    IVec reduce(const IVec& x) const;

    // Index of the coset of x in [0, index).
    long long coset_index(const IVec& x) const;

    // Representative number i, in canonical order.
    IVec rep(long long i) const;

    long long index_ll() const { return index_ll_; }

private:
    std::vector<Int> digits_of(const IVec& x) const;

    int n_;
    Int index_;
    long long index_ll_;
    std::vector<Int> divisors_; // length n_, includes 1s
    IMat v_;                    // snf: s = u * sub * v
    IMat vinv_;                 // v^{-1}, integral
};

// Validates `sub` (square, nonsingular; throws SingularSublattice) and
// returns the quotient structure of lattice coordinates modulo its row span.
QuotientGroup quotient_structure(const IMat& sub);

} // namespace latchroma
