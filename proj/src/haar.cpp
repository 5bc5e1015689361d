#include "meyerlab/haar.hpp"

#include <cmath>

namespace meyerlab::groupmodels {

using namespace exactnum;

double left_haar_density(const GroupModel& model, const GroupPoint& at) {
    switch (model.kind) {
        case ModelKind::AdditiveRn: return 1.0;
        case ModelKind::AxPlusB: {
            const double a = scalar_to_double(at.coords[0]);
            return 1.0 / (a * a);
        }
        case ModelKind::AdditiveSeries:
            throw ModelMismatchError("no quadrature backend for series models");
    }
    throw Error("unreachable");
}

double haar_quadrature(const GroupModel& model, const Integrand& f, const HaarQuadrature& q) {
    if (q.region.empty() || q.region.dim() == 0)
        throw WindowError("empty quadrature region");
    if (q.region.dim() != model.dim)
        throw ModelMismatchError("quadrature region dimension does not match the model");
    if (model.kind == ModelKind::AxPlusB && q.region.axes[0].lo <= 0)
        throw WindowError("AxPlusB quadrature region must have a > 0");
    if (q.resolution < 1) throw WindowError("quadrature resolution must be >= 1");

    const int n = q.region.dim();
    const Rational res(q.resolution);
    std::vector<Rational> step(static_cast<std::size_t>(n));
    double cell_volume = 1.0;
    for (int i = 0; i < n; ++i) {
        step[static_cast<std::size_t>(i)] = q.region.axes[static_cast<std::size_t>(i)].width() / res;
        cell_volume *= to_double(step[static_cast<std::size_t>(i)]);
    }

    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    double sum = 0.0;
    while (true) {
        GroupPoint mid{model, {}};
        for (int i = 0; i < n; ++i) {
            Rational c = q.region.axes[static_cast<std::size_t>(i)].lo +
                         step[static_cast<std::size_t>(i)] *
                             Rational(2 * idx[static_cast<std::size_t>(i)] + 1, 2);
            if (model.kind == ModelKind::AdditiveRn && model.domain == ScalarDomain::Quad)
                mid.coords.push_back(QuadElem::from_rational(c, model.quad_d));
            else
                mid.coords.push_back(std::move(c));
        }
        const double val = f(mid);
        if (!std::isfinite(val)) throw Error("non-finite integrand value at " + format_point(mid));
        sum += val * left_haar_density(model, mid) * cell_volume;

        int axis = n - 1;
        while (axis >= 0) {
            if (++idx[static_cast<std::size_t>(axis)] < q.resolution) break;
            idx[static_cast<std::size_t>(axis)] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
    return sum;
}

}  // namespace meyerlab::groupmodels
