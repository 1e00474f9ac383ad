#include "latchroma/matrix.hpp"

namespace latchroma {

namespace {

// Returns (echelon form, det, rank). Plain fraction arithmetic is fine at
// these sizes.
struct GaussResult {
    QMat m;
    Rat det;
    int rank;
};

GaussResult gauss(QMat a) {
    int n = a.rows(), m = a.cols();
    Rat d(1);
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (a(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            d = 0;
            continue;
        }
        if (piv != r) {
            for (int j = 0; j < m; ++j) std::swap(a(piv, j), a(r, j));
            d = -d;
        }
        d *= a(r, c);
        for (int i = r + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / a(r, c);
            for (int j = c; j < m; ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    if (r < n) d = 0;
    return {std::move(a), d, r};
}

} // namespace

Rat det(const QMat& a) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "det of non-square");
    if (a.rows() == 0) return Rat(1);
    return gauss(a).det;
}

int rank(const QMat& a) { return gauss(a).rank; }

QMat inverse(const QMat& a) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square");
    int n = a.rows();
    QMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    // Gauss-Jordan
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (aug(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw Error(ErrorCode::SingularSublattice, "matrix not invertible");
        if (piv != c)
            for (int j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(c, j));
        Rat p = aug(c, c);
        for (int j = 0; j < 2 * n; ++j) aug(c, j) /= p;
        for (int i = 0; i < n; ++i) {
            if (i == c || aug(i, c) == 0) continue;
            Rat f = aug(i, c);
            for (int j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
        }
    }
    QMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

Int det_int(const IMat& a) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "det of non-square");
    int n = a.rows();
    if (n == 0) return 1;
    IMat m = a;
    Int prev(1);
    int sign = 1;
    for (int c = 0; c < n - 1; ++c) {
        if (m(c, c) == 0) {
            int piv = -1;
            for (int i = c + 1; i < n; ++i)
                if (m(i, c) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            sign = -sign;
        }
        for (int i = c + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(c, c) - m(i, c) * m(c, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(c, c);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

QMat to_rational(const IMat& a) {
    QMat q(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) q(i, j) = Rat(a(i, j));
    return q;
}

IMat to_integer(const QMat& a) {
    IMat m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (!is_integer(a(i, j)))
                throw Error(ErrorCode::BadInput, "matrix entry not an integer");
            m(i, j) = numer(a(i, j));
        }
    return m;
}

} // namespace latchroma
