#pragma once

#include <array>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace latchroma {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numer(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denom(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return denom(q) == 1; }

// Floor of p/q for any sign of p (q > 0 after normalization).
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

// Nearest integer; ties round towards +infinity.
Int round_rat(const Rat& q);

Int gcd_int(Int a, Int b);
Int lcm_int(const Int& a, const Int& b);

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

// Smallest k >= 0 with k*k >= q (q >= 0).
Int ceil_sqrt_rat(const Rat& q);

// Lagrange decomposition n = a^2 + b^2 + c^2 + d^2, n >= 0.
std::array<Int, 4> four_squares(const Int& n);

// Parses "p", "-p/q" or a plain integer string. Throws Error(NotRational).
Rat parse_rat(const std::string& s);

std::string rat_to_string(const Rat& q);

double rat_to_double(const Rat& q);

} // namespace latchroma
