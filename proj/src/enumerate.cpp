#include "latchroma/enumerate.hpp"

#include <algorithm>

#include "latchroma/lll.hpp"

namespace latchroma {

namespace {

// Exact Schnorr-Euchner enumeration over a Gram matrix. Collects either all
// minima of the coset t + Z^n or everything within a fixed radius.
class Enumerator {
public:
    Enumerator(const QMat& gram, QVec t, bool exclude_zero)
        : n_(gram.rows()), t_(std::move(t)), exclude_zero_(exclude_zero) {
        // LDL^T: gram = L D L^T, L unit lower triangular
        lmat_ = QMat::identity(n_);
        diag_.assign(n_, Rat(0));
        for (int c = 0; c < n_; ++c) {
            Rat d = gram(c, c);
            for (int k = 0; k < c; ++k) d -= diag_[k] * lmat_(c, k) * lmat_(c, k);
            diag_[c] = d;
            for (int i = c + 1; i < n_; ++i) {
                Rat v = gram(i, c);
                for (int k = 0; k < c; ++k) v -= diag_[k] * lmat_(i, k) * lmat_(c, k);
                lmat_(i, c) = v / d;
            }
        }
        z_.assign(n_, Rat(0));
        center_.assign(n_, Rat(0));
        partial_.assign(n_ + 1, Rat(0));
    }

    // All z in t + Z^n with z G z^T == min (or <= radius in ball mode).
    void run(bool ball_mode, const Rat& radius, std::vector<QVec>* out, Rat* out_min,
             size_t cap) {
        ball_mode_ = ball_mode;
        cap_ = cap;
        results_.clear();
        if (ball_mode_) {
            best_ = radius;
        } else {
            best_ = initial_radius();
        }
        descend(n_ - 1);
        if (!ball_mode_ && results_.empty())
            throw Error(ErrorCode::BadInput, "enumeration found nothing"); // unreachable
        std::sort(results_.begin(), results_.end());
        out->swap(results_);
        if (out_min) *out_min = best_;
    }

private:
    Rat initial_radius() {
        // Babai nearest-plane point; for the zero coset use the smallest
        // diagonal Gram entry (norm of a basis vector).
        bool t_integral = true;
        for (const Rat& x : t_)
            if (!is_integer(x)) t_integral = false;
        if (t_integral && exclude_zero_) {
            Rat r = diag_[0];
            // diag of gram = L D L^T diagonal: reconstruct norms of basis rows
            for (int i = 0; i < n_; ++i) {
                Rat g(0);
                for (int k = 0; k <= i; ++k) g += diag_[k] * lmat_(i, k) * lmat_(i, k);
                if (i == 0 || g < r) r = g;
            }
            return r;
        }
        QVec z(n_);
        for (int i = n_ - 1; i >= 0; --i) {
            Rat c(0);
            for (int j = i + 1; j < n_; ++j) c += lmat_(j, i) * z[j];
            // pick z_i in t_i + Z closest to -c
            Rat target = -c - t_[i];
            z[i] = t_[i] + Rat(round_rat(target));
        }
        Rat q(0);
        for (int i = 0; i < n_; ++i) {
            Rat c(0);
            for (int j = i + 1; j < n_; ++j) c += lmat_(j, i) * z[j];
            q += diag_[i] * (z[i] + c) * (z[i] + c);
        }
        return q;
    }

    void descend(int level) {
        if (level < 0) {
            Rat q = partial_[0];
            if (exclude_zero_) {
                bool zero = true;
                for (const Rat& x : z_)
                    if (x != 0) zero = false;
                if (zero) return;
            }
            if (ball_mode_) {
                if (results_.size() >= cap_)
                    throw Error(ErrorCode::TooManyVertices, "ball enumeration exceeds cap");
                results_.push_back(z_);
            } else {
                if (q < best_) {
                    best_ = q;
                    results_.clear();
                }
                if (q == best_) results_.push_back(z_);
            }
            return;
        }
        Rat c(0);
        for (int j = level + 1; j < n_; ++j) c += lmat_(j, level) * z_[j];
        center_[level] = c;
        Rat budget = best_ - partial_[level + 1];
        if (budget < 0) return;
        // z = t_level + x, x integer; zig-zag from the nearest choice
        Rat target = -c - t_[level];
        Int x0 = round_rat(target);
        for (int dir = 0; dir < 2; ++dir) {
            Int x = dir == 0 ? x0 : x0 - 1;
            Int step = dir == 0 ? 1 : -1;
            for (;;) {
                Rat z = t_[level] + Rat(x);
                Rat term = diag_[level] * (z + c) * (z + c);
                if (term > best_ - partial_[level + 1]) break;
                z_[level] = z;
                partial_[level] = partial_[level + 1] + term;
                descend(level - 1);
                x += step;
            }
        }
    }

    int n_;
    QVec t_;
    bool exclude_zero_;
    bool ball_mode_ = false;
    size_t cap_ = 0;
    QMat lmat_;
    QVec diag_;
    QVec z_;
    QVec center_;
    QVec partial_; // partial_[i] = sum of terms at levels >= i
    Rat best_;
    std::vector<QVec> results_;
};

// Reduced-basis view of a lattice for enumeration: coset t in the original
// basis becomes t * U^{-1} in the reduced one; solutions map back through U.
struct ReducedView {
    QMat gram;
    IMat u;
    QMat u_q;

    explicit ReducedView(const Lattice& l) {
        u = lll_transform(l.gram);
        u_q = to_rational(u);
        gram = mat_mul(mat_mul(u_q, l.gram), transpose(u_q));
    }

    QVec to_reduced(const QVec& t) const {
        QMat uinv = inverse(u_q);
        return vec_mat(t, uinv);
    }

    QVec to_original(const QVec& z) const { return vec_mat(z, u_q); }
};

bool vec_is_integral(const QVec& v) {
    for (const Rat& x : v)
        if (!is_integer(x)) return false;
    return true;
}

IVec to_int_vec(const QVec& v) {
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = numer(v[i]);
    return out;
}

} // namespace

CosetMinima shortest_vectors_in_coset(const Lattice& l, const QVec& t) {
    if (static_cast<int>(t.size()) != l.dim)
        throw Error(ErrorCode::DimensionMismatch, "coset vector length != dim");
    ReducedView rv(l);
    QVec tr = rv.to_reduced(t);
    bool exclude_zero = vec_is_integral(t);
    Enumerator en(rv.gram, tr, exclude_zero);
    std::vector<QVec> found;
    Rat min;
    en.run(false, Rat(0), &found, &min, 0);
    CosetMinima out;
    out.min_norm2 = min;
    out.vectors.reserve(found.size());
    for (const QVec& z : found) out.vectors.push_back(rv.to_original(z));
    std::sort(out.vectors.begin(), out.vectors.end());
    return out;
}

std::vector<IVec> vectors_in_ball(const Lattice& l, const Rat& r2, size_t cap) {
    if (r2 < 0) throw Error(ErrorCode::BadInput, "negative radius");
    ReducedView rv(l);
    QVec t(l.dim, Rat(0));
    Enumerator en(rv.gram, t, false);
    std::vector<QVec> found;
    en.run(true, r2, &found, nullptr, cap);
    std::vector<IVec> out;
    out.reserve(found.size());
    for (const QVec& z : found) out.push_back(to_int_vec(rv.to_original(z)));
    std::sort(out.begin(), out.end());
    return out;
}

RelevantVectorSet relevant_vectors(const Lattice& l, int dim_cap) {
    if (l.dim > dim_cap)
        throw Error(ErrorCode::DimensionCapExceeded,
                    "relevant_vectors: dimension " + std::to_string(l.dim) +
                        " exceeds cap " + std::to_string(dim_cap) +
                        " (catalog metadata covers Leech-sized lattices)");
    ReducedView rv(l);
    QMat uinv = inverse(rv.u_q);
    RelevantVectorSet out;
    // one subproblem per nonzero class of L/2L
    for (unsigned long long mask = 1; mask < (1ull << l.dim); ++mask) {
        QVec t(l.dim, Rat(0));
        for (int i = 0; i < l.dim; ++i)
            if (mask >> i & 1) t[i] = Rat(1, 2);
        QVec tr = vec_mat(t, uinv);
        Enumerator en(rv.gram, tr, false);
        std::vector<QVec> found;
        Rat min;
        en.run(false, Rat(0), &found, &min, 0);
        if (found.size() == 2) {
            for (const QVec& z : found) {
                QVec half = rv.to_original(z); // u/2 in lattice coordinates
                QVec full(half.size());
                for (size_t i = 0; i < half.size(); ++i) full[i] = half[i] * 2;
                out.vectors.push_back(to_int_vec(full));
                out.norm2.push_back(min * 4);
            }
        }
    }
    // deterministic global order: by norm, then lexicographic
    std::vector<size_t> idx(out.vectors.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (out.norm2[a] != out.norm2[b]) return out.norm2[a] < out.norm2[b];
        return out.vectors[a] < out.vectors[b];
    });
    RelevantVectorSet sorted;
    for (size_t i : idx) {
        sorted.vectors.push_back(out.vectors[i]);
        sorted.norm2.push_back(out.norm2[i]);
    }
    sorted.count = sorted.vectors.size();
    return sorted;
}

MinVectors min_vectors(const Lattice& l, int enum_dim_cap) {
    if (l.dim > enum_dim_cap) {
        if (l.meta.min_norm2)
            return {*l.meta.min_norm2, {}, false};
        throw Error(ErrorCode::DimensionCapExceeded,
                    "min_vectors: dimension exceeds cap and no catalog metadata");
    }
    QVec t(l.dim, Rat(0));
    CosetMinima m = shortest_vectors_in_coset(l, t);
    MinVectors out;
    out.norm2 = m.min_norm2;
    for (const QVec& v : m.vectors) out.vectors.push_back(to_int_vec(v));
    return out;
}

bool contains_vector(const RelevantVectorSet& s, const IVec& v) {
    for (const IVec& u : s.vectors)
        if (u == v) return true;
    return false;
}

} // namespace latchroma
