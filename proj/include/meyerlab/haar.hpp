#pragma once

#include <functional>

#include "meyerlab/box.hpp"

namespace meyerlab::groupmodels {

// Deterministic midpoint rule against the model's left-Haar density
// (AdditiveRn: da, AxPlusB: a^{-2} da db). Cell midpoints are exact rational
// points; the weighted sum is accumulated in a fixed row-major order.
struct HaarQuadrature {
    Box region;
    int resolution = 128;  // subdivisions per axis
};

using Integrand = std::function<double(const GroupPoint&)>;

double left_haar_density(const GroupModel& model, const GroupPoint& at);

double haar_quadrature(const GroupModel& model, const Integrand& f, const HaarQuadrature& q);

}  // namespace meyerlab::groupmodels
