#pragma once

#include <boost/multiprecision/cpp_int.hpp>

// Arbitrary-precision integers and rationals used throughout the library.
// Fixed-width types are never used for lattice entries: normal-form
// intermediates can exceed any machine word even for small inputs.

namespace torint {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// cpp_int division truncates toward zero; these round toward -infinity,
// which is what pivot reduction into [0, pivot) needs.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_mod(const Int& a, const Int& b) {
    return a - floor_div(a, b) * b;
}

inline Int rat_floor(const Rat& q) {
    return floor_div(numerator(q), denominator(q));
}

// Fractional part in [0, 1).
inline Rat frac_part(const Rat& q) {
    return q - Rat(rat_floor(q));
}

}  // namespace torint
