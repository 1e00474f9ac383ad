#include "latchroma/rational.hpp"

#include <cctype>

#include "latchroma/errors.hpp"

namespace latchroma {

Int floor_rat(const Rat& q) {
    Int n = numer(q), d = denom(q);
    Int r = n / d;
    if (n < 0 && r * d != n) --r;
    return r;
}

Int ceil_rat(const Rat& q) {
    Int n = numer(q), d = denom(q);
    Int r = n / d;
    if (n > 0 && r * d != n) ++r;
    return r;
}

Int round_rat(const Rat& q) { return floor_rat(q + Rat(1, 2)); }

Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

Int ceil_sqrt_rat(const Rat& q) {
    if (q <= 0) return 0;
    // k = ceil(sqrt(p/d)): smallest k with k^2 * d >= p.
    Int p = numer(q), d = denom(q);
    Int k = isqrt(p / d);
    while (k * k * d < p) ++k;
    while (k > 0 && (k - 1) * (k - 1) * d >= p) --k;
    return k;
}

std::array<Int, 4> four_squares(const Int& n) {
    std::array<Int, 4> out{0, 0, 0, 0};
    if (n == 0) return out;
    // Search with a >= b >= c >= d; a solution in that range always exists.
    for (Int a = isqrt(n); 4 * a * a >= n; --a) {
        Int r1 = n - a * a;
        for (Int b = isqrt(r1); b >= 0 && 3 * b * b >= r1; --b) {
            Int r2 = r1 - b * b;
            for (Int c = isqrt(r2); c >= 0 && 2 * c * c >= r2; --c) {
                Int r3 = r2 - c * c;
                Int d = isqrt(r3);
                if (d * d == r3) {
                    out = {a, b, c, d};
                    return out;
                }
            }
        }
    }
    throw Error(ErrorCode::BadInput, "four_squares: unreachable");
}

Rat parse_rat(const std::string& s) {
    auto bad = [&]() { return Error(ErrorCode::NotRational, "not a rational: '" + s + "'"); };
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw bad();
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(t));
        Int p(t.substr(0, slash));
        Int q(t.substr(slash + 1));
        if (q == 0) throw bad();
        return Rat(p, q);
    } catch (const std::exception&) {
        throw bad();
    }
}

std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return numer(q).str();
    return numer(q).str() + "/" + denom(q).str();
}

double rat_to_double(const Rat& q) { return q.convert_to<double>(); }

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::NotRational: return "NotRational";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::BadDimension: return "BadDimension";
        case ErrorCode::SingularSublattice: return "SingularSublattice";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DimensionCapExceeded: return "DimensionCapExceeded";
        case ErrorCode::TooManyVertices: return "TooManyVertices";
        case ErrorCode::LoopInQuotient: return "LoopInQuotient";
        case ErrorCode::ImproperInput: return "ImproperInput";
        case ErrorCode::InapplicableDimension: return "InapplicableDimension";
        case ErrorCode::RhoHypothesisFails: return "RhoHypothesisFails";
        case ErrorCode::SumNotZero: return "SumNotZero";
        case ErrorCode::NotABasis: return "NotABasis";
        case ErrorCode::PositiveInnerProduct: return "PositiveInnerProduct";
        case ErrorCode::DisconnectedInput: return "DisconnectedInput";
        case ErrorCode::NoCycle: return "NoCycle";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

} // namespace latchroma
