#include "latchroma/lll.hpp"

namespace latchroma {

namespace {

constexpr int kDeltaNum = 3, kDeltaDen = 4;

struct GsState {
    const QMat* gram;
    IMat u;             // current basis rows in terms of original basis
    std::vector<QVec> mu; // mu[i][j], j < i
    QVec b;               // squared GS norms

    int n() const { return u.rows(); }

    Rat inner(int i, int j) const {
        // u_i * gram * u_j^T
        Rat s(0);
        const QMat& g = *gram;
        for (int a = 0; a < u.cols(); ++a) {
            if (u(i, a) == 0) continue;
            for (int c = 0; c < u.cols(); ++c)
                if (u(j, c) != 0) s += Rat(u(i, a)) * g(a, c) * Rat(u(j, c));
        }
        return s;
    }

    void recompute() {
        int m = n();
        mu.assign(m, QVec());
        b.assign(m, Rat(0));
        for (int i = 0; i < m; ++i) {
            mu[i].assign(i, Rat(0));
            Rat bi = inner(i, i);
            for (int j = 0; j < i; ++j) {
                Rat x = inner(i, j);
                for (int k = 0; k < j; ++k) x -= mu[i][k] * mu[j][k] * b[k];
                mu[i][j] = x / b[j];
                bi -= mu[i][j] * mu[i][j] * b[j];
            }
            b[i] = bi;
        }
    }
};

} // namespace

IMat lll_transform(const QMat& gram) {
    int n = gram.rows();
    GsState st;
    st.gram = &gram;
    st.u = IMat::identity(n);
    st.recompute();

    int k = 1;
    while (k < n) {
        // size-reduce row k against rows k-1..0
        for (int j = k - 1; j >= 0; --j) {
            Int q = round_rat(st.mu[k][j]);
            if (q != 0) {
                for (int c = 0; c < n; ++c) st.u(k, c) -= q * st.u(j, c);
                st.recompute();
            }
        }
        // Lovasz condition with delta = 3/4
        Rat lhs = st.b[k];
        Rat rhs = (Rat(kDeltaNum, kDeltaDen) - st.mu[k][k - 1] * st.mu[k][k - 1]) * st.b[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            for (int c = 0; c < n; ++c) std::swap(st.u(k, c), st.u(k - 1, c));
            st.recompute();
            k = std::max(k - 1, 1);
        }
    }
    return st.u;
}

LllResult lll_reduce(const Lattice& l) {
    IMat u = lll_transform(l.gram);
    QMat nb = mat_mul(to_rational(u), l.basis);
    Lattice red = make_lattice(nb, l.name);
    red.meta = l.meta;
    return {std::move(red), std::move(u)};
}

} // namespace latchroma
