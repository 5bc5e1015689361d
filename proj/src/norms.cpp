#include "meyerlab/norms.hpp"

#include <cmath>
#include <limits>

namespace meyerlab::pointsets {

using namespace exactnum;
using namespace groupmodels;

Scalar maxnorm(const GroupPoint& g) {
    if (g.coords.empty()) throw ModelMismatchError("max-norm of a zero-arity point");
    Scalar best = scalar_abs(g.coords[0]);
    for (std::size_t i = 1; i < g.coords.size(); ++i) {
        Scalar cand = scalar_abs(g.coords[i]);
        if (scalar_less(best, cand)) best = cand;
    }
    return best;
}

Scalar maxnorm_diff(const GroupPoint& a, const GroupPoint& b) {
    if (a.coords.size() != b.coords.size())
        throw ModelMismatchError("max-norm of points with different arity");
    Scalar best = scalar_abs(scalar_arith(a.coords[0], b.coords[0], ArithOp::Sub));
    for (std::size_t i = 1; i < a.coords.size(); ++i) {
        Scalar cand = scalar_abs(scalar_arith(a.coords[i], b.coords[i], ArithOp::Sub));
        if (scalar_less(best, cand)) best = cand;
    }
    return best;
}

bool within(const GroupPoint& a, const GroupPoint& b, const Rational& r) {
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        Scalar diff = scalar_abs(scalar_arith(a.coords[i], b.coords[i], ArithOp::Sub));
        if (scalar_compare(diff, r) > 0) return false;
    }
    return true;
}

bool canonical_less(const GroupPoint& a, const GroupPoint& b) {
    const bool real_domain = a.model.kind != ModelKind::AdditiveSeries;
    if (real_domain) {
        Scalar na = maxnorm(a), nb = maxnorm(b);
        if (!scalar_eq(na, nb)) return scalar_less(na, nb);
        int za = 0, zb = 0;
        for (const auto& c : a.coords) za += scalar_is_zero(c) ? 0 : 1;
        for (const auto& c : b.coords) zb += scalar_is_zero(c) ? 0 : 1;
        if (za != zb) return za < zb;
        for (std::size_t i = 0; i < a.coords.size(); ++i) {
            Scalar aa = scalar_abs(a.coords[i]), ab = scalar_abs(b.coords[i]);
            if (!scalar_eq(aa, ab)) return scalar_less(aa, ab);
            const bool neg_a = scalar_sign(a.coords[i]) < 0;
            const bool neg_b = scalar_sign(b.coords[i]) < 0;
            if (neg_a != neg_b) return neg_b;  // nonnegative first
        }
        return false;
    }
    return point_less(a, b);
}

std::optional<Scalar> distance_to_set(const GroupPoint& x, const std::vector<GroupPoint>& points) {
    if (points.empty()) return std::nullopt;
    // double prefilter: collect candidates within a slack band of the
    // approximate minimum, then decide exactly among them
    double best_approx = std::numeric_limits<double>::infinity();
    std::vector<double> approx(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        double m = 0;
        for (std::size_t c = 0; c < x.coords.size(); ++c)
            m = std::max(m, std::abs(scalar_to_double(x.coords[c]) -
                                     scalar_to_double(points[i].coords[c])));
        approx[i] = m;
        best_approx = std::min(best_approx, m);
    }
    const double slack = 1e-9 * (1.0 + best_approx);
    std::optional<Scalar> best;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (approx[i] > best_approx + slack) continue;
        Scalar d = maxnorm_diff(x, points[i]);
        if (!best || scalar_less(d, *best)) best = d;
    }
    return best;
}

}  // namespace meyerlab::pointsets
