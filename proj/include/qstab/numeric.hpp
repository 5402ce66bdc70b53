#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qstab {

// All arithmetic in this library is exact. Intermediate values (Hua
// coefficients, interpolation weights) need rationals; final Kac
// polynomials are asserted integral before they leave the engine.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

} // namespace qstab
