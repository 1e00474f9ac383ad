#include "latchroma/normal_forms.hpp"

namespace latchroma {

namespace {

void swap_cols(IMat& m, int a, int b) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void swap_rows(IMat& m, int a, int b) {
    for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// col[b] -= q * col[a]
void addmul_col(IMat& m, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows(); ++i) m(i, b) -= q * m(i, a);
}

void addmul_row(IMat& m, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < m.cols(); ++j) m(b, j) -= q * m(a, j);
}

void negate_col(IMat& m, int a) {
    for (int i = 0; i < m.rows(); ++i) m(i, a) = -m(i, a);
}

} // namespace

HnfResult hnf(const IMat& m) {
    IMat h = m;
    IMat u = IMat::identity(m.cols());
    int rows = h.rows(), cols = h.cols();
    int pc = 0;
    for (int i = 0; i < rows && pc < cols; ++i) {
        // gcd out the row to the right of the pivot column
        bool nonzero = false;
        for (int j = pc; j < cols; ++j)
            if (h(i, j) != 0) nonzero = true;
        if (!nonzero) continue;
        for (;;) {
            int piv = -1;
            for (int j = pc; j < cols; ++j) {
                if (h(i, j) == 0) continue;
                if (piv < 0 || boost::multiprecision::abs(h(i, j)) <
                                   boost::multiprecision::abs(h(i, piv)))
                    piv = j;
            }
            if (piv != pc) {
                swap_cols(h, pc, piv);
                swap_cols(u, pc, piv);
            }
            bool done = true;
            for (int j = pc + 1; j < cols; ++j) {
                if (h(i, j) == 0) continue;
                Int q = h(i, j) / h(i, pc);
                addmul_col(h, pc, j, q);
                addmul_col(u, pc, j, q);
                if (h(i, j) != 0) done = false;
            }
            if (done) break;
        }
        if (h(i, pc) < 0) {
            negate_col(h, pc);
            negate_col(u, pc);
        }
        // reduce columns left of the pivot
        for (int j = 0; j < pc; ++j) {
            if (h(i, j) == 0) continue;
            Int q = h(i, j) / h(i, pc);
            if (h(i, j) - q * h(i, pc) < 0) q -= 1; // keep residue in [0, pivot)
            addmul_col(h, pc, j, q);
            addmul_col(u, pc, j, q);
        }
        ++pc;
    }
    return {std::move(h), std::move(u)};
}

IMat row_hnf_basis(const IMat& m) {
    IMat t = transpose(m);
    HnfResult r = hnf(t); // h = t * u, columns of h span column lattice of t
    IMat rowform = transpose(r.h);
    // drop zero rows
    int nz = 0;
    for (int i = 0; i < rowform.rows(); ++i) {
        bool zero = true;
        for (int j = 0; j < rowform.cols(); ++j)
            if (rowform(i, j) != 0) zero = false;
        if (!zero) ++nz;
    }
    IMat out(nz, rowform.cols());
    int k = 0;
    for (int i = 0; i < rowform.rows(); ++i) {
        bool zero = true;
        for (int j = 0; j < rowform.cols(); ++j)
            if (rowform(i, j) != 0) zero = false;
        if (!zero) {
            for (int j = 0; j < rowform.cols(); ++j) out(k, j) = rowform(i, j);
            ++k;
        }
    }
    return out;
}

SnfResult snf(const IMat& m) {
    IMat s = m;
    IMat u = IMat::identity(m.rows());
    IMat v = IMat::identity(m.cols());
    int rows = s.rows(), cols = s.cols();
    int n = std::min(rows, cols);

    for (int t = 0; t < n; ++t) {
        // find a nonzero pivot in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < rows && pi < 0; ++i)
            for (int j = t; j < cols; ++j)
                if (s(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != t) {
            swap_rows(s, pi, t);
            swap_rows(u, pi, t);
        }
        if (pj != t) {
            swap_cols(s, pj, t);
            swap_cols(v, pj, t);
        }
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                while (s(i, t) != 0) {
                    Int q = s(i, t) / s(t, t);
                    addmul_row(s, t, i, q);
                    addmul_row(u, t, i, q);
                    if (s(i, t) != 0) {
                        swap_rows(s, i, t);
                        swap_rows(u, i, t);
                        clean = false;
                    }
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                while (s(t, j) != 0) {
                    Int q = s(t, j) / s(t, t);
                    addmul_col(s, t, j, q);
                    addmul_col(v, t, j, q);
                    if (s(t, j) != 0) {
                        swap_cols(s, j, t);
                        swap_cols(v, j, t);
                        clean = false;
                    }
                }
            }
            if (clean) break;
        }
        if (s(t, t) < 0) {
            for (int j = 0; j < cols; ++j) s(t, j) = -s(t, j);
            for (int j = 0; j < u.cols(); ++j) u(t, j) = -u(t, j);
        }
    }

    // enforce divisibility d1 | d2 | ...
    for (;;) {
        bool changed = false;
        for (int t = 0; t + 1 < n; ++t) {
            if (s(t, t) == 0 || s(t + 1, t + 1) == 0) continue;
            if (s(t + 1, t + 1) % s(t, t) == 0) continue;
            changed = true;
            // add column t+1 to column t, then re-clear the 2x2 corner
            for (int i = 0; i < rows; ++i) s(i, t) += s(i, t + 1);
            for (int i = 0; i < cols; ++i) v(i, t) += v(i, t + 1);
            for (;;) {
                bool clean = true;
                for (int i = t + 1; i < rows; ++i) {
                    while (s(i, t) != 0) {
                        Int q = s(i, t) / s(t, t);
                        addmul_row(s, t, i, q);
                        addmul_row(u, t, i, q);
                        if (s(i, t) != 0) {
                            swap_rows(s, i, t);
                            swap_rows(u, i, t);
                        }
                    }
                }
                for (int j = t + 1; j < cols; ++j) {
                    while (s(t, j) != 0) {
                        Int q = s(t, j) / s(t, t);
                        addmul_col(s, t, j, q);
                        addmul_col(v, t, j, q);
                        if (s(t, j) != 0) {
                            swap_cols(s, j, t);
                            swap_cols(v, j, t);
                            clean = false;
                        }
                    }
                }
                if (clean) break;
            }
            if (s(t, t) < 0) {
                for (int j = 0; j < cols; ++j) s(t, j) = -s(t, j);
                for (int j = 0; j < u.cols(); ++j) u(t, j) = -u(t, j);
            }
        }
        if (!changed) break;
    }

    for (int t = 0; t < n; ++t) {
        if (s(t, t) < 0) {
            for (int j = 0; j < cols; ++j) s(t, j) = -s(t, j);
            for (int j = 0; j < u.cols(); ++j) u(t, j) = -u(t, j);
        }
    }

    SnfResult out{std::move(s), std::move(u), std::move(v), {}};
    for (int t = 0; t < n; ++t)
        if (out.s(t, t) != 0) out.divisors.push_back(out.s(t, t));
    return out;
}

} // namespace latchroma
