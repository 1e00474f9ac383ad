#include "latchroma/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "latchroma/normal_forms.hpp"

namespace latchroma {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<double> ambient_double(const Lattice& l, const IVec& coords) {
    QVec q(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) q[i] = Rat(coords[i]);
    QVec amb = vec_mat(q, l.basis);
    std::vector<double> out(amb.size());
    for (size_t i = 0; i < amb.size(); ++i) out[i] = rat_to_double(amb[i]);
    return out;
}

} // namespace

FourierData FourierData::from(const Lattice& l, const RelevantVectorSet& vor) {
    return from(l, vor, std::vector<double>(vor.count, 1.0));
}

FourierData FourierData::from(const Lattice& l, const RelevantVectorSet& vor,
                              const std::vector<double>& weights) {
    if (weights.size() != vor.count)
        throw Error(ErrorCode::BadInput, "weight count != relevant vector count");
    FourierData d;
    d.ambient = l.ambient_dim;
    d.vectors.reserve(vor.count);
    for (const IVec& v : vor.vectors) d.vectors.push_back(ambient_double(l, v));
    d.weights = weights;
    return d;
}

FourierEval fourier_value(const FourierData& data, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != data.ambient)
        throw Error(ErrorCode::DimensionMismatch, "fourier_value: x has wrong dimension");
    FourierEval e;
    e.value = 0;
    e.gradient.assign(data.ambient, 0.0);
    for (size_t i = 0; i < data.vectors.size(); ++i) {
        const auto& u = data.vectors[i];
        double phase = 0;
        for (int j = 0; j < data.ambient; ++j) phase += u[j] * x[j];
        phase *= kTwoPi;
        double w = data.weights[i];
        e.value += w * std::cos(phase);
        double s = -kTwoPi * w * std::sin(phase);
        for (int j = 0; j < data.ambient; ++j) e.gradient[j] += s * u[j];
    }
    return e;
}

namespace {

double grad_norm(const std::vector<double>& g) {
    double s = 0;
    for (double x : g) s += x * x;
    return std::sqrt(s);
}

// Hessian of F at x: H_jk = -(2 pi)^2 sum_u w cos(2 pi u.x) u_j u_k.
std::vector<std::vector<double>> fourier_hessian(const FourierData& data,
                                                 const std::vector<double>& x) {
    int n = data.ambient;
    std::vector<std::vector<double>> h(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < data.vectors.size(); ++i) {
        const auto& u = data.vectors[i];
        double phase = 0;
        for (int j = 0; j < n; ++j) phase += u[j] * x[j];
        double f = -kTwoPi * kTwoPi * data.weights[i] * std::cos(kTwoPi * phase);
        for (int j = 0; j < n; ++j) {
            if (u[j] == 0) continue;
            for (int k = 0; k < n; ++k) h[j][k] += f * u[j] * u[k];
        }
    }
    return h;
}

// Solves (H + lambda I) s = g in place; returns false if elimination breaks
// down.
bool solve_spd(std::vector<std::vector<double>> h, std::vector<double> g, double lambda,
               std::vector<double>* s) {
    int n = static_cast<int>(g.size());
    for (int i = 0; i < n; ++i) h[i][i] += lambda;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int i = c + 1; i < n; ++i)
            if (std::abs(h[i][c]) > std::abs(h[piv][c])) piv = i;
        if (std::abs(h[piv][c]) < 1e-14) return false;
        std::swap(h[piv], h[c]);
        std::swap(g[piv], g[c]);
        for (int i = c + 1; i < n; ++i) {
            double f = h[i][c] / h[c][c];
            if (f == 0) continue;
            for (int j = c; j < n; ++j) h[i][j] -= f * h[c][j];
            g[i] -= f * g[c];
        }
    }
    s->assign(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double v = g[i];
        for (int j = i + 1; j < n; ++j) v -= h[i][j] * (*s)[j];
        (*s)[i] = v / h[i][i];
    }
    return true;
}

// Newton refinement towards the nearby critical point. Plain descent cannot
// push the gradient below ~1e-6 in double precision (function-value
// comparisons saturate first), so the gradient tolerance is finished off on
// the derivative side.
std::pair<double, bool> newton_polish(const FourierData& data, std::vector<double>& x,
                                      double grad_tol) {
    FourierEval e = fourier_value(data, x);
    for (int it = 0; it < 50; ++it) {
        double gn = grad_norm(e.gradient);
        if (gn < grad_tol) return {e.value, true};
        auto h = fourier_hessian(data, x);
        std::vector<double> s;
        bool ok = false;
        std::vector<double> trial(x.size());
        for (double lambda : {0.0, 1e-8, 1e-4, 1e-2, 1.0}) {
            if (!solve_spd(h, e.gradient, lambda, &s)) continue;
            for (size_t j = 0; j < x.size(); ++j) trial[j] = x[j] - s[j];
            FourierEval te = fourier_value(data, trial);
            // accept small increases: near the critical point the value is
            // flat to rounding while the gradient still shrinks
            if (te.value <= e.value + 1e-9 &&
                grad_norm(te.gradient) < gn) {
                x = trial;
                e = te;
                ok = true;
                break;
            }
        }
        if (!ok) return {e.value, gn < grad_tol};
    }
    return {e.value, grad_norm(e.gradient) < grad_tol};
}

// Armijo backtracking descent; returns final value and whether the gradient
// tolerance was reached (after the Newton finish).
std::pair<double, bool> descend(const FourierData& data, std::vector<double>& x,
                                double grad_tol, int max_iters) {
    constexpr double kArmijo = 1e-4;
    FourierEval e = fourier_value(data, x);
    double step = 1.0 / kTwoPi;
    for (int it = 0; it < max_iters; ++it) {
        double gn = grad_norm(e.gradient);
        if (gn < grad_tol) return {e.value, true};
        double g2 = gn * gn;
        std::vector<double> trial(x.size());
        bool moved = false;
        double a = step;
        for (int half = 0; half < 60; ++half) {
            for (size_t j = 0; j < x.size(); ++j) trial[j] = x[j] - a * e.gradient[j];
            FourierEval te = fourier_value(data, trial);
            if (te.value <= e.value - kArmijo * a * g2) {
                double gain = e.value - te.value;
                x = trial;
                e = te;
                step = a * 2;
                moved = gain > 1e-12 * (1.0 + std::abs(e.value));
                break;
            }
            a *= 0.5;
        }
        if (!moved) break; // flat to rounding: finish on the gradient side
    }
    return newton_polish(data, x, grad_tol);
}

} // namespace

SpectralResult minimize_fourier(const Lattice& l, const FourierData& data,
                                const MinimizeOptions& opts) {
    int n = l.dim;
    int starts = opts.starts > 0 ? opts.starts : 64 * n;
    Lattice dual_l = dual(l);
    std::vector<std::vector<double>> dual_rows(n, std::vector<double>(l.ambient_dim));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < l.ambient_dim; ++j)
            dual_rows[i][j] = rat_to_double(dual_l.basis(i, j));

    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    SpectralResult res;
    res.starts_used = starts;
    res.min_value = std::numeric_limits<double>::infinity();
    for (int s = 0; s < starts; ++s) {
        std::vector<double> x(l.ambient_dim, 0.0);
        for (int i = 0; i < n; ++i) {
            double y = unif(rng);
            for (int j = 0; j < l.ambient_dim; ++j) x[j] += y * dual_rows[i][j];
        }
        auto [value, converged] = descend(data, x, opts.grad_tol, opts.max_iters);
        if (converged) {
            ++res.converged_count;
            res.converged_values.push_back(value);
        }
        if (value < res.min_value) {
            res.min_value = value;
            res.argmin = x;
        }
    }
    double total_weight = 0;
    for (double w : data.weights) total_weight += w;
    if (res.min_value < 0) res.hoffman = 1 + total_weight / (-res.min_value);
    res.hoffman_int = static_cast<long long>(std::ceil(res.hoffman - 1e-9));
    if (opts.oracle_min)
        res.certified = std::abs(res.min_value - *opts.oracle_min) < 1e-6;
    return res;
}

std::vector<Rat> an_critical_values(int n) {
    if (n < 1) throw Error(ErrorCode::BadDimension, "An needs n >= 1");
    return {Rat(-(n + 1)), Rat(n * (n + 1))};
}

std::vector<Rat> dn_critical_values(int n) {
    if (n < 4) throw Error(ErrorCode::BadDimension, "Dn needs n >= 4");
    std::set<Rat> vals;
    if (n % 2 == 1) vals.insert(Rat(-2 * (n - 1)));
    for (int n1 = 0; n1 <= n; ++n1)
        for (int nm = 0; n1 + nm <= n; ++nm) {
            int no = n - n1 - nm;
            if (no == 1) continue;
            if (no != 0) {
                // require |(n1 - nm) / (no - 1)| < 1
                long long d = std::llabs(static_cast<long long>(no) - 1);
                if (std::llabs(static_cast<long long>(n1) - nm) >= d) continue;
            }
            Rat v = Rat(2 * (n1 - nm) * (n1 - nm), 1 - no) - 2 * n1 - 2 * nm;
            vals.insert(v);
        }
    return std::vector<Rat>(vals.begin(), vals.end());
}

std::vector<Rat> en_reference_values(const std::string& name) {
    // Adjoint-character critical values shifted down by the rank.
    if (name == "E6") return {Rat(-9), Rat(-8), Rat(0), Rat(8), Rat(72)};
    if (name == "E7")
        return {Rat(-14), Rat(-10), Rat(-9), Rat(-6), Rat(-18, 5), Rat(-2), Rat(18), Rat(126)};
    if (name == "E8")
        return {Rat(-16),      Rat(-12), Rat(-320, 27), Rat(-185, 16), Rat(-11),
                Rat(-10),      Rat(-8),  Rat(-3),       Rat(16),       Rat(240)};
    throw Error(ErrorCode::UnknownName, "reference values exist for E6, E7, E8 only");
}

std::optional<Rat> known_fourier_min(const std::string& name, int n) {
    if (name == "Z") return Rat(-2 * n);
    if (name == "A") return Rat(-(n + 1));
    if (name == "D") return n % 2 == 0 ? Rat(-2 * n) : Rat(-2 * (n - 1));
    if (name == "E6") return Rat(-9);
    if (name == "E7") return Rat(-14);
    if (name == "E8") return Rat(-16);
    return std::nullopt;
}

BinaryCode hamming_h8() {
    const unsigned gens[4] = {
        // rows 1000|0111, 0100|1011, 0010|1101, 0001|1110 (bit i = coord i)
        0b11100001u, 0b11010010u, 0b10110100u, 0b01111000u};
    std::set<unsigned> words;
    for (unsigned mask = 0; mask < 16; ++mask) {
        unsigned w = 0;
        for (int i = 0; i < 4; ++i)
            if (mask >> i & 1) w ^= gens[i];
        words.insert(w);
    }
    BinaryCode code;
    code.length = 8;
    code.words.assign(words.begin(), words.end());
    code.weight_distribution.assign(9, 0);
    for (unsigned w : code.words) ++code.weight_distribution[__builtin_popcount(w)];
    return code;
}

Lattice construction_a(const BinaryCode& code) {
    int n = code.length;
    // generators: code words lifted to Z^n plus 2 e_i, then Gram / 2
    IMat gens(static_cast<int>(code.words.size()) + n, n);
    int r = 0;
    for (unsigned w : code.words) {
        for (int j = 0; j < n; ++j) gens(r, j) = (w >> j & 1) ? 1 : 0;
        ++r;
    }
    for (int i = 0; i < n; ++i) {
        gens(r, i) = 2;
        ++r;
    }
    IMat basis = row_hnf_basis(gens);
    QMat gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int s(0);
            for (int k = 0; k < n; ++k) s += basis(i, k) * basis(j, k);
            gram(i, j) = Rat(s, 2);
        }
    return lattice_from_gram(gram, "ConstructionA");
}

double e8_trig_identity_residual(const std::vector<double>& x) {
    if (x.size() != 8) throw Error(ErrorCode::DimensionMismatch, "need an 8-vector");
    BinaryCode h8 = hamming_h8();
    // root form: sum over the 240 roots (plus the constant 16), written in
    // the same variables as the product form
    double lhs = 16.0;
    for (int i = 0; i < 8; ++i) lhs += 2.0 * std::cos(2.0 * x[i]);
    for (unsigned w : h8.words) {
        if (__builtin_popcount(w) != 4) continue;
        int support[4], si = 0;
        for (int j = 0; j < 8; ++j)
            if (w >> j & 1) support[si++] = j;
        for (unsigned signs = 0; signs < 16; ++signs) {
            double phase = 0;
            for (int t = 0; t < 4; ++t)
                phase += (signs >> t & 1) ? -x[support[t]] : x[support[t]];
            lhs += std::cos(phase);
        }
    }
    // product form
    double rhs = 0;
    for (int i = 0; i < 8; ++i) rhs += 4.0 * std::cos(x[i]) * std::cos(x[i]);
    for (unsigned w : h8.words) {
        if (__builtin_popcount(w) != 4) continue;
        double prod = 16.0;
        for (int j = 0; j < 8; ++j)
            if (w >> j & 1) prod *= std::cos(x[j]);
        rhs += prod;
    }
    return std::abs(lhs - rhs);
}

GridScan e8_polynomial_grid_scan() {
    BinaryCode h8 = hamming_h8();
    std::vector<std::array<int, 4>> quads;
    for (unsigned w : h8.words) {
        if (__builtin_popcount(w) != 4) continue;
        std::array<int, 4> q{};
        int si = 0;
        for (int j = 0; j < 8; ++j)
            if (w >> j & 1) q[si++] = j;
        quads.push_back(q);
    }
    const double grid[5] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    GridScan out{std::numeric_limits<double>::infinity(), false};
    int idx[8] = {0};
    double t[8];
    for (;;) {
        for (int i = 0; i < 8; ++i) t[i] = grid[idx[i]];
        double p = 0;
        for (int i = 0; i < 8; ++i) p += t[i] * t[i];
        for (const auto& q : quads) p += 4.0 * t[q[0]] * t[q[1]] * t[q[2]] * t[q[3]];
        if (p < out.min_value) out.min_value = p;
        int c = 7;
        while (c >= 0 && ++idx[c] == 5) idx[c--] = 0;
        if (c < 0) break;
    }
    // p(0) = 0 is on the grid, so the minimum is attained at 0 iff it is 0
    out.min_at_zero = out.min_value == 0.0;
    return out;
}

} // namespace latchroma
