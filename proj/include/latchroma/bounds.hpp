#pragma once

#include <map>
#include <optional>

#include "latchroma/enumerate.hpp"
#include "latchroma/graph.hpp"
#include "latchroma/quotient.hpp"

namespace latchroma {

// Periodic coloring certificate: a sublattice avoiding the relevant vectors
// plus a proper coloring of the finite quotient. Colors are keyed by the
// canonical representative index of QuotientGroup.
struct QuotientColoring {
    IMat sublattice;         // rows in lattice coordinates
    int k = 0;               // number of colors
    std::vector<int> colors; // size = quotient index, entry in [0, k)
};

struct VerifyResult {
    bool accepted = false;
    std::string reason;              // empty when accepted
    std::optional<IVec> witness_rep; // rejected edge: representative ...
    std::optional<IVec> witness_vec; // ... and relevant vector
};

// Exhaustive certificate check: no relevant vector in the sublattice, and
// color(reduce(r + u)) != color(r) for every representative r and relevant u.
VerifyResult verify_coloring(const Lattice& l, const RelevantVectorSet& vor,
                             const QuotientColoring& cert);

// |Vor|/2 + 1.
Int upper_bound_degree(const RelevantVectorSet& vor);

// Lifts a proper coloring of the half cube 1/2 H_n through x mod 2 to a
// certificate for D_n over the sublattice 2Z^n. Throws ImproperInput.
QuotientColoring dn_coloring_from_halfcube(int n, const std::vector<int>& hc_coloring);

// 16-coloring of E8 over 2Z^8: colors 0..7 on the D8 part via x mod 2,
// colors 8..15 on the glue coset via (x - (1/2,...,1/2)) mod 2.
QuotientColoring e8_coloring_from_d8(const std::vector<int>& hc8_coloring);

// Certificate for an orthogonal sum from accepted per-summand certificates:
// k = max k_i, color = sum of summand colors mod k.
QuotientColoring combine_orthogonal(const std::vector<const Lattice*>& summands,
                                    const std::vector<QuotientColoring>& certs,
                                    const Lattice& sum);

// chi(L) * ... certificate-independent lower bound from sphere packing
// optimality; only dimensions with a proven optimal density are accepted.
struct PackingBound {
    Int bound;
    Rat bound_squared; // exact (rho/2)^(2n) * delta(L)^2 / delta_Rn^2
};

PackingBound sphere_packing_lower_bound(const Lattice& l,
                                        int enum_dim_cap = kDefaultRelevantDimCap);

// Simple checkerboard-style certificate for Z^n (parity of the coordinate
// sum); accepted with k = 2.
QuotientColoring zn_checkerboard(int n);

// Proper coloring of a quotient graph turned into a certificate.
QuotientColoring certificate_from_quotient_coloring(const IMat& sub, int k,
                                                    const std::vector<int>& colors);

} // namespace latchroma
