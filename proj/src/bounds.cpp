#include "latchroma/bounds.hpp"

#include <algorithm>

#include "latchroma/catalog.hpp"
#include "latchroma/solve.hpp"

namespace latchroma {

namespace {

bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

// Rank of an even-weight bitmask among even-weight masks in increasing
// order; matches the vertex order of half_cube_graph.
int half_cube_rank(unsigned mask) {
    unsigned r = 0;
    for (unsigned x = 0; x < mask; ++x)
        if (__builtin_popcount(x) % 2 == 0) ++r;
    return static_cast<int>(r);
}

} // namespace

VerifyResult verify_coloring(const Lattice& l, const RelevantVectorSet& vor,
                             const QuotientColoring& cert) {
    VerifyResult res;
    QuotientGroup q(cert.sublattice);
    if (q.index_ll() < 0)
        throw Error(ErrorCode::BadInput, "certificate quotient too large");
    long long n = q.index_ll();
    if (static_cast<long long>(cert.colors.size()) != n) {
        res.reason = "color table size " + std::to_string(cert.colors.size()) +
                     " != quotient index " + std::to_string(n);
        return res;
    }
    for (int c : cert.colors)
        if (c < 0 || c >= cert.k) {
            res.reason = "color out of range";
            return res;
        }
    for (const IVec& u : vor.vectors) {
        if (is_zero(q.reduce(u))) {
            res.reason = "VorInSublattice";
            res.witness_vec = u;
            return res;
        }
    }
    for (long long i = 0; i < n; ++i) {
        IVec r = q.rep(i);
        for (const IVec& u : vor.vectors) {
            IVec s(r.size());
            for (size_t k = 0; k < s.size(); ++k) s[k] = r[k] + u[k];
            long long j = q.coset_index(s);
            if (cert.colors[i] == cert.colors[j]) {
                res.reason = "EdgeMonochromatic";
                res.witness_rep = r;
                res.witness_vec = u;
                return res;
            }
        }
    }
    res.accepted = true;
    return res;
}

Int upper_bound_degree(const RelevantVectorSet& vor) {
    return Int(vor.count) / 2 + 1;
}

QuotientColoring dn_coloring_from_halfcube(int n, const std::vector<int>& hc_coloring) {
    if (n < 4) throw Error(ErrorCode::BadDimension, "Dn needs n >= 4");
    FiniteGraph hc = half_cube_graph(n);
    if (static_cast<int>(hc_coloring.size()) != hc.n_vertices() ||
        !is_proper_coloring(hc, hc_coloring))
        throw Error(ErrorCode::ImproperInput, "not a proper half-cube coloring");
    Lattice dn = catalog("D", n);
    // sublattice 2Z^n in D_n coordinates
    QMat scaled = to_rational(IMat::identity(n));
    for (int i = 0; i < n; ++i) scaled(i, i) = 2;
    QMat sub_q = mat_mul(scaled, inverse(dn.basis)); // 2 e_i in basis coords
    IMat sub = to_integer(sub_q);
    QuotientGroup q(sub);
    long long m = q.index_ll();
    QuotientColoring cert;
    cert.sublattice = sub;
    cert.k = 1 + *std::max_element(hc_coloring.begin(), hc_coloring.end());
    cert.colors.resize(m);
    for (long long i = 0; i < m; ++i) {
        IVec r = q.rep(i);
        QVec coords(r.size());
        for (size_t j = 0; j < r.size(); ++j) coords[j] = Rat(r[j]);
        QVec amb = vec_mat(coords, dn.basis);
        unsigned mask = 0;
        for (int j = 0; j < n; ++j) {
            if (!is_integer(amb[j])) throw Error(ErrorCode::BadInput, "Dn point not integral");
            Int v = numer(amb[j]);
            if (boost::multiprecision::abs(v % 2) == 1) mask |= 1u << j;
        }
        cert.colors[i] = hc_coloring[half_cube_rank(mask)];
    }
    return cert;
}

QuotientColoring e8_coloring_from_d8(const std::vector<int>& hc8_coloring) {
    FiniteGraph hc = half_cube_graph(8);
    if (static_cast<int>(hc8_coloring.size()) != hc.n_vertices() ||
        !is_proper_coloring(hc, hc8_coloring))
        throw Error(ErrorCode::ImproperInput, "not a proper coloring of the 8-dim half cube");
    int base = 1 + *std::max_element(hc8_coloring.begin(), hc8_coloring.end());
    Lattice e8 = catalog("E8");
    QMat scaled(8, 8);
    for (int i = 0; i < 8; ++i) scaled(i, i) = 2;
    IMat sub = to_integer(mat_mul(scaled, inverse(e8.basis)));
    QuotientGroup q(sub);
    long long m = q.index_ll(); // 256
    QuotientColoring cert;
    cert.sublattice = sub;
    cert.k = 2 * base;
    cert.colors.resize(m);
    for (long long i = 0; i < m; ++i) {
        IVec r = q.rep(i);
        QVec coords(r.size());
        for (size_t j = 0; j < r.size(); ++j) coords[j] = Rat(r[j]);
        QVec amb = vec_mat(coords, e8.basis);
        bool integral = true;
        for (const Rat& x : amb)
            if (!is_integer(x)) integral = false;
        int offset = 0;
        if (!integral) {
            // glue coset: shift by (1/2,...,1/2)
            for (Rat& x : amb) x -= Rat(1, 2);
            offset = base;
        }
        unsigned mask = 0;
        for (int j = 0; j < 8; ++j) {
            if (!is_integer(amb[j]))
                throw Error(ErrorCode::BadInput, "E8 point neither integral nor glue");
            if (boost::multiprecision::abs(numer(amb[j]) % 2) == 1) mask |= 1u << j;
        }
        cert.colors[i] = offset + hc8_coloring[half_cube_rank(mask)];
    }
    return cert;
}

QuotientColoring combine_orthogonal(const std::vector<const Lattice*>& summands,
                                    const std::vector<QuotientColoring>& certs,
                                    const Lattice& sum) {
    if (summands.size() != certs.size() || summands.empty())
        throw Error(ErrorCode::BadInput, "combine_orthogonal: size mismatch");
    int total_dim = 0;
    int k = 0;
    for (size_t s = 0; s < summands.size(); ++s) {
        total_dim += summands[s]->dim;
        k = std::max(k, certs[s].k);
    }
    if (total_dim != sum.dim)
        throw Error(ErrorCode::DimensionMismatch, "combine_orthogonal: dims do not add up");
    IMat sub(total_dim, total_dim);
    int off = 0;
    for (size_t s = 0; s < summands.size(); ++s) {
        const IMat& b = certs[s].sublattice;
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) sub(off + i, off + j) = b(i, j);
        off += summands[s]->dim;
    }
    QuotientGroup q(sub);
    std::vector<QuotientGroup> qs;
    qs.reserve(certs.size());
    for (const auto& c : certs) qs.emplace_back(c.sublattice);
    QuotientColoring cert;
    cert.sublattice = sub;
    cert.k = k;
    long long m = q.index_ll();
    cert.colors.resize(m);
    for (long long i = 0; i < m; ++i) {
        IVec r = q.rep(i);
        int color = 0;
        int o = 0;
        for (size_t s = 0; s < summands.size(); ++s) {
            IVec part(r.begin() + o, r.begin() + o + summands[s]->dim);
            color = (color + certs[s].colors[qs[s].coset_index(part)]) % k;
            o += summands[s]->dim;
        }
        cert.colors[i] = color;
    }
    return cert;
}

PackingBound sphere_packing_lower_bound(const Lattice& l, int enum_dim_cap) {
    int n = l.dim;
    // delta_{R^n}^2 for the dimensions with proven optimal packings,
    // from mu^n / (2^n vol) applied to Z1, A2, A3, E8, Leech.
    Rat delta2;
    switch (n) {
        case 1: delta2 = Rat(1, 4); break;
        case 2: delta2 = Rat(1, 12); break;
        case 3: delta2 = Rat(1, 32); break;
        case 8: delta2 = Rat(1, 256); break;
        case 24: delta2 = Rat(1); break;
        default:
            throw Error(ErrorCode::InapplicableDimension,
                        "no proven optimal density in dimension " + std::to_string(n));
    }
    Rat min2, max_rel2;
    if (l.dim <= enum_dim_cap) {
        RelevantVectorSet vor = relevant_vectors(l, enum_dim_cap);
        MinVectors mv = min_vectors(l, enum_dim_cap);
        min2 = mv.norm2;
        max_rel2 = *std::max_element(vor.norm2.begin(), vor.norm2.end());
    } else if (l.meta.min_norm2 && l.meta.relevant_norm2 && !l.meta.relevant_norm2->empty()) {
        min2 = *l.meta.min_norm2;
        max_rel2 = *std::max_element(l.meta.relevant_norm2->begin(),
                                     l.meta.relevant_norm2->end());
    } else {
        throw Error(ErrorCode::DimensionCapExceeded,
                    "sphere packing bound needs enumeration or catalog metadata");
    }
    // all relevant vectors must be shorter than rho = sqrt(2) * mu
    if (!(max_rel2 < 2 * min2))
        throw Error(ErrorCode::RhoHypothesisFails,
                    "a relevant vector has norm^2 " + rat_to_string(max_rel2) +
                        " >= 2 * min^2 = " + rat_to_string(2 * min2));
    // bound^2 = 2^n * min2^n / (4^n det) / delta2, exact
    Rat num(1), den(1);
    for (int i = 0; i < n; ++i) {
        num *= 2 * min2;
        den *= 4;
    }
    Rat b2 = num / (den * l.det()) / delta2;
    PackingBound out;
    out.bound_squared = b2;
    out.bound = ceil_sqrt_rat(b2);
    return out;
}

QuotientColoring zn_checkerboard(int n) {
    // kernel of x -> sum x_i mod 2
    IMat sub(n, n);
    sub(0, 0) = 2;
    for (int i = 1; i < n; ++i) {
        sub(i, 0) = -1;
        sub(i, i) = 1;
    }
    QuotientGroup q(sub);
    QuotientColoring cert;
    cert.sublattice = sub;
    cert.k = 2;
    cert.colors.resize(q.index_ll());
    for (long long i = 0; i < q.index_ll(); ++i) {
        IVec r = q.rep(i);
        Int s(0);
        for (const Int& x : r) s += x;
        cert.colors[i] = static_cast<int>(boost::multiprecision::abs(s % 2).convert_to<int>());
    }
    return cert;
}

QuotientColoring certificate_from_quotient_coloring(const IMat& sub, int k,
                                                    const std::vector<int>& colors) {
    QuotientColoring cert;
    cert.sublattice = sub;
    cert.k = k;
    cert.colors = colors;
    return cert;
}

} // namespace latchroma
