#include "latchroma/lattice.hpp"

#include "latchroma/normal_forms.hpp"

namespace latchroma {

namespace {

Rat lcm_of_denominators(const QMat& m) {
    Int l(1);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) l = lcm_int(l, denom(m(i, j)));
    return Rat(l);
}

void check_positive_definite(const QMat& gram) {
    // leading principal minors
    int n = gram.rows();
    for (int k = 1; k <= n; ++k) {
        QMat sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub(i, j) = gram(i, j);
        if (det(sub) <= 0)
            throw Error(ErrorCode::RankDeficient, "gram not positive definite");
    }
}

} // namespace

Rat Lattice::det() const { return latchroma::det(gram); }

Rat Lattice::norm2(const QVec& coords) const {
    QVec gx(dim, Rat(0));
    for (int i = 0; i < dim; ++i) {
        if (coords[i] == 0) continue;
        for (int j = 0; j < dim; ++j) gx[j] += coords[i] * gram(i, j);
    }
    Rat s(0);
    for (int j = 0; j < dim; ++j) s += gx[j] * coords[j];
    return s;
}

Rat Lattice::norm2(const IVec& coords) const {
    QVec q(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) q[i] = Rat(coords[i]);
    return norm2(q);
}

Rat Lattice::inner(const IVec& a, const IVec& b) const {
    Rat s(0);
    for (int i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim; ++j) s += Rat(a[i]) * gram(i, j) * Rat(b[j]);
    }
    return s;
}

IMat Lattice::scaled_gram() const {
    IMat g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Rat x = scale * gram(i, j);
            if (!is_integer(x)) throw Error(ErrorCode::BadInput, "scale does not clear gram");
            g(i, j) = numer(x);
        }
    return g;
}

Lattice make_lattice(const QMat& basis, std::string name) {
    Lattice l;
    l.dim = basis.rows();
    l.ambient_dim = basis.cols();
    if (l.dim == 0 || l.ambient_dim < l.dim)
        throw Error(ErrorCode::RankDeficient, "basis must have rank = row count");
    l.basis = basis;
    l.gram = mat_mul(basis, transpose(basis));
    check_positive_definite(l.gram); // also rejects dependent rows
    l.scale = lcm_of_denominators(l.gram);
    l.name = std::move(name);
    return l;
}

Lattice lattice_from_gram(const QMat& gram, std::string name) {
    int n = gram.rows();
    if (n == 0 || gram.cols() != n)
        throw Error(ErrorCode::BadInput, "gram must be square and nonempty");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (gram(i, j) != gram(j, i))
                throw Error(ErrorCode::BadInput, "gram not symmetric");
    check_positive_definite(gram);

    // LDL^T decomposition, exact.
    QMat lmat = QMat::identity(n);
    QVec diag(n);
    for (int c = 0; c < n; ++c) {
        Rat d = gram(c, c);
        for (int k = 0; k < c; ++k) d -= diag[k] * lmat(c, k) * lmat(c, k);
        diag[c] = d;
        for (int i = c + 1; i < n; ++i) {
            Rat v = gram(i, c);
            for (int k = 0; k < c; ++k) v -= diag[k] * lmat(i, k) * lmat(c, k);
            lmat(i, c) = v / d;
        }
    }

    // Each pivot p/q contributes a block of <= 4 rational columns realizing
    // sqrt(p/q) as a vector: p/q = (a^2+b^2+c^2+d^2)/q^2 with a..d from
    // Lagrange on p*q.
    std::vector<QVec> cols(n); // per-pivot column block for W
    int ambient = 0;
    for (int c = 0; c < n; ++c) {
        Int p = numer(diag[c]), q = denom(diag[c]);
        auto sq = four_squares(p * q);
        QVec block;
        for (const Int& s : sq)
            if (s != 0) block.push_back(Rat(s, q));
        if (block.empty()) block.push_back(Rat(0)); // cannot happen for pd gram
        cols[c] = std::move(block);
        ambient += static_cast<int>(cols[c].size());
    }

    QMat w(n, ambient);
    int off = 0;
    for (int c = 0; c < n; ++c) {
        for (size_t t = 0; t < cols[c].size(); ++t) w(c, off + static_cast<int>(t)) = cols[c][t];
        off += static_cast<int>(cols[c].size());
    }
    QMat basis = mat_mul(lmat, w);

    Lattice l = make_lattice(basis, std::move(name));
    if (!(l.gram == gram)) throw Error(ErrorCode::BadInput, "from_gram reconstruction failed");
    return l;
}

Lattice lattice_from_generators(const QMat& rows, std::string name) {
    if (rows.rows() == 0) throw Error(ErrorCode::BadInput, "no generators");
    // clear denominators, reduce the integer row span, scale back
    Int l(1);
    for (int i = 0; i < rows.rows(); ++i)
        for (int j = 0; j < rows.cols(); ++j) l = lcm_int(l, denom(rows(i, j)));
    IMat scaled(rows.rows(), rows.cols());
    for (int i = 0; i < rows.rows(); ++i)
        for (int j = 0; j < rows.cols(); ++j) scaled(i, j) = numer(rows(i, j) * Rat(l));
    IMat basis_scaled = row_hnf_basis(scaled);
    QMat basis(basis_scaled.rows(), basis_scaled.cols());
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = 0; j < basis.cols(); ++j) basis(i, j) = Rat(basis_scaled(i, j), l);
    return make_lattice(basis, std::move(name));
}

Lattice dual(const Lattice& l) {
    Lattice d;
    d.dim = l.dim;
    d.ambient_dim = l.ambient_dim;
    QMat ginv = inverse(l.gram);
    d.basis = mat_mul(ginv, l.basis);
    d.gram = ginv;
    d.scale = lcm_of_denominators(d.gram);
    if (!l.name.empty()) d.name = l.name + "*";
    return d;
}

Lattice orthogonal_sum(const Lattice& a, const Lattice& b) {
    Lattice s;
    s.dim = a.dim + b.dim;
    s.ambient_dim = a.ambient_dim + b.ambient_dim;
    s.basis = QMat(s.dim, s.ambient_dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.ambient_dim; ++j) s.basis(i, j) = a.basis(i, j);
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.ambient_dim; ++j) s.basis(a.dim + i, a.ambient_dim + j) = b.basis(i, j);
    s.gram = QMat(s.dim, s.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) s.gram(i, j) = a.gram(i, j);
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j) s.gram(a.dim + i, a.dim + j) = b.gram(i, j);
    s.scale = Rat(lcm_int(numer(a.scale), numer(b.scale)));
    if (!a.name.empty() && !b.name.empty()) s.name = a.name + "+" + b.name;
    return s;
}

IMat sublattice_coords(const Lattice& sup, const Lattice& sub) {
    if (sup.ambient_dim != sub.ambient_dim)
        throw Error(ErrorCode::BadInput, "ambient dimensions differ");
    if (sup.dim != sub.dim)
        throw Error(ErrorCode::BadInput, "sublattice rank differs");
    // Solve C * sup.basis = sub.basis: C = sub.basis * sup.basis^T * gram^{-1}.
    QMat cross = mat_mul(sub.basis, transpose(sup.basis)); // dim x dim
    QMat c = mat_mul(cross, inverse(sup.gram));
    // verify the solution reproduces sub exactly (sup rows span may differ)
    if (!(mat_mul(c, sup.basis) == sub.basis))
        throw Error(ErrorCode::BadInput, "not a sublattice: span mismatch");
    return to_integer(c);
}

Lattice rescale(const Lattice& l, const Rat& factor) {
    if (factor <= 0) throw Error(ErrorCode::BadInput, "rescale factor must be positive");
    QMat b = l.basis;
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) b(i, j) *= factor;
    Lattice out = make_lattice(b, l.name);
    if (l.meta.min_norm2) out.meta.min_norm2 = *l.meta.min_norm2 * factor * factor;
    if (l.meta.relevant_norm2) {
        std::vector<Rat> r;
        for (const Rat& x : *l.meta.relevant_norm2) r.push_back(x * factor * factor);
        out.meta.relevant_norm2 = std::move(r);
    }
    return out;
}

} // namespace latchroma
