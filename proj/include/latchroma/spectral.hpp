#pragma once

#include <cstdint>
#include <set>

#include "latchroma/enumerate.hpp"
#include "latchroma/lattice.hpp"

namespace latchroma {

// Relevant vectors in ambient coordinates, as doubles, for the numerical
// minimizer. Weights are per vector (uniform 1 unless supplied).
struct FourierData {
    std::vector<std::vector<double>> vectors;
    std::vector<double> weights;
    int ambient = 0;

    static FourierData from(const Lattice& l, const RelevantVectorSet& vor);
    static FourierData from(const Lattice& l, const RelevantVectorSet& vor,
                            const std::vector<double>& weights);
};

struct FourierEval {
    double value;
    std::vector<double> gradient;
};

// F(x) = sum_u w(u) cos(2 pi u.x); gradient = -2 pi sum_u w(u) sin(2 pi u.x) u.
FourierEval fourier_value(const FourierData& data, const std::vector<double>& x);

struct SpectralResult {
    double min_value = 0;
    std::vector<double> argmin;  // ambient coordinates, modulo the dual lattice
    double hoffman = 1;          // 1 - (min/|Vor|)^{-1}
    long long hoffman_int = 1;   // ceil(hoffman)
    int starts_used = 0;
    int converged_count = 0;
    bool certified = false;      // matches a closed-form/reference oracle
    std::vector<double> converged_values; // one entry per converged start
};

struct MinimizeOptions {
    int starts = 0;     // 0 = default 64 * dim
    uint64_t seed = 0;
    double grad_tol = 1e-10;
    int max_iters = 10'000;
    // when set, certify against this oracle value within 1e-6
    std::optional<double> oracle_min;
};

// Multistart gradient descent with Armijo backtracking over the torus
// R^n / L*; start points are y ~ U[0,1)^n mapped through the dual basis.
SpectralResult minimize_fourier(const Lattice& l, const FourierData& data,
                                const MinimizeOptions& opts = {});

// Exact critical-value sets.
std::vector<Rat> an_critical_values(int n);            // {n(n+1), -(n+1)}
std::vector<Rat> dn_critical_values(int n);            // Theorem-style enumeration, n >= 4
std::vector<Rat> en_reference_values(const std::string& name); // E6/E7/E8, rank-shifted

// Closed-form/reference minimum of F for a catalog lattice, when known.
std::optional<Rat> known_fourier_min(const std::string& name, int n);

// Extended Hamming code H8.
struct BinaryCode {
    int length = 0;
    std::vector<unsigned> words; // bitmasks, sorted
    std::vector<int> weight_distribution; // index = weight
};

BinaryCode hamming_h8();

// Construction A on a binary code: { x / sqrt(2) : x in Z^n, x mod 2 in C }.
// Returned through the exact Gram (M M^T / 2 for an integral generator M).
Lattice construction_a(const BinaryCode& code);

// | root-form - product-form | of the E8 trigonometric identity at x.
double e8_trig_identity_residual(const std::vector<double>& x);

// Minimum of p(t) = sum t_i^2 + 4 sum_{c in H8, wt 4} t_i t_j t_k t_l over
// the grid {-1,-1/2,0,1/2,1}^8, plus whether the minimum is attained at 0.
struct GridScan {
    double min_value;
    bool min_at_zero;
};

GridScan e8_polynomial_grid_scan();

} // namespace latchroma
