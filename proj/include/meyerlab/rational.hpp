#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "meyerlab/errors.hpp"

namespace meyerlab::exactnum {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored gcd-reduced with positive
// denominator, so equality is structural and sets of rationals are
// deterministic.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

inline int sign_of(const Rational& r) { return r.sign(); }

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Largest integer <= r.
inline Int floor_of(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline Int ceil_of(const Rational& r) { return -floor_of(-r); }

// Nearest integer; halves round toward +infinity.
inline Int round_half_up(const Rational& r) { return floor_of(r + Rational(1, 2)); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Text form "p/q", or "p" when q == 1.
std::string format_rational(const Rational& r);

// Accepts "p", "p/q", optional leading sign. Throws ParseError otherwise.
Rational parse_rational(const std::string& text);

}  // namespace meyerlab::exactnum
