#pragma once

#include "meyerlab/box.hpp"

namespace meyerlab::pointsets {

using exactnum::Rational;
using exactnum::Scalar;
using groupmodels::GroupPoint;

// Max-norm of the coordinate tuple, as an exact scalar. This is the distance
// convention everywhere in the artifact: box windows and exact signs compose
// cleanly. For AxPlusB it is the coordinate-chart norm, not an invariant
// metric.
Scalar maxnorm(const GroupPoint& g);
Scalar maxnorm_diff(const GroupPoint& a, const GroupPoint& b);

// True if |a - b|_inf <= r, exactly.
bool within(const GroupPoint& a, const GroupPoint& b, const Rational& r);

// Canonical order: by max-norm, then by number of nonzero coordinates, then
// per coordinate by (absolute value, sign with nonnegative first), then
// structurally. Every deterministic witness/tie-break in the artifact uses
// this order; on series models it degrades to the structural order.
bool canonical_less(const GroupPoint& a, const GroupPoint& b);

// Exact min over the patch of |x - q|_inf; nullopt on an empty patch. Uses a
// floating-point prefilter, with exact comparisons deciding every candidate
// within the slack band.
std::optional<Scalar> distance_to_set(const GroupPoint& x,
                                      const std::vector<GroupPoint>& points);

}  // namespace meyerlab::pointsets
