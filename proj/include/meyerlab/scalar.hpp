#pragma once

#include <string>
#include <variant>

#include "meyerlab/fpseries.hpp"
#include "meyerlab/quad.hpp"
#include "meyerlab/rational.hpp"

namespace meyerlab::exactnum {

// One coordinate value in any of the three coordinate domains.
using Scalar = std::variant<Rational, QuadElem, FpSeries>;

enum class ArithOp { Add, Sub, Mul, Div };

// Exact field operation; both operands must live in the same domain.
Scalar scalar_arith(const Scalar& x, const Scalar& y, ArithOp op);

Scalar scalar_neg(const Scalar& x);
bool scalar_is_zero(const Scalar& x);
bool scalar_eq(const Scalar& x, const Scalar& y);

// Total structural order used for deterministic point sets: real-embedded
// order for rationals and quadratic elements, lexicographic for series.
bool scalar_less(const Scalar& x, const Scalar& y);

// Exact sign for the real domains (throws on series).
int scalar_sign(const Scalar& x);
Scalar scalar_abs(const Scalar& x);

// Exact comparison of a real-domain scalar against a rational bound.
int scalar_compare(const Scalar& x, const Rational& r);

double scalar_to_double(const Scalar& x);

std::string format_scalar(const Scalar& x);

// Recognizes the three textual encodings: "p/q", "a+b*sqrt(d)",
// "p=..;N=..;v=..;c=..".
Scalar parse_scalar(const std::string& text);

}  // namespace meyerlab::exactnum
