#include "meyerlab/finite_patch.hpp"

#include <algorithm>

namespace meyerlab::pointsets {

using namespace exactnum;
using namespace groupmodels;

bool FinitePatch::contains(const GroupPoint& p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p, point_less);
    return it != points.end() && *it == p;
}

bool FinitePatch::is_symmetric() const {
    for (const auto& p : points)
        if (!contains(groupmodels::inverse(p))) return false;
    return true;
}

bool FinitePatch::has_identity() const { return contains(identity(model)); }

FinitePatch make_patch(const GroupModel& model, std::vector<GroupPoint> points, Box window,
                       bool complete) {
    for (const auto& p : points) {
        check_point(p);
        if (!(p.model == model)) throw ModelMismatchError("patch point from a different model");
        if (!window.axes.empty() && !window.contains(p))
            throw WindowError("patch point outside the declared window: " + format_point(p));
    }
    std::sort(points.begin(), points.end(), point_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return FinitePatch{model, std::move(points), std::move(window), complete};
}

FinitePatch patch_product(const FinitePatch& A, const FinitePatch& B) {
    if (!(A.model == B.model)) throw ModelMismatchError("product of patches from different models");
    std::vector<GroupPoint> out;
    out.reserve(A.points.size() * B.points.size());
    for (const auto& a : A.points)
        for (const auto& b : B.points) out.push_back(multiply(a, b));
    Box window;
    const bool additive = A.model.kind != ModelKind::AxPlusB;
    if (additive && A.window.dim() == B.window.dim() && !A.window.axes.empty()) {
        for (int i = 0; i < A.window.dim(); ++i)
            window.axes.push_back(minkowski_sum(A.window.axes[static_cast<std::size_t>(i)],
                                                B.window.axes[static_cast<std::size_t>(i)]));
    }
    // truncation cannot guarantee completeness of a product; always heuristic
    return make_patch(A.model, std::move(out), std::move(window), false);
}

FinitePatch patch_inverse(const FinitePatch& A) {
    std::vector<GroupPoint> out;
    out.reserve(A.points.size());
    for (const auto& a : A.points) out.push_back(groupmodels::inverse(a));
    Box window;
    if (A.model.kind != ModelKind::AxPlusB)
        for (const auto& ax : A.window.axes) window.axes.push_back(negate(ax));
    return make_patch(A.model, std::move(out), std::move(window), A.complete);
}

FinitePatch patch_difference_set(const FinitePatch& A) {
    return patch_product(patch_inverse(A), A);
}

FinitePatch translate_patch(const FinitePatch& A, const GroupPoint& g) {
    std::vector<GroupPoint> out;
    out.reserve(A.points.size());
    for (const auto& a : A.points) out.push_back(multiply(g, a));
    Box window;
    if (A.model.kind == ModelKind::AdditiveRn && !A.window.axes.empty()) {
        for (std::size_t i = 0; i < A.window.axes.size(); ++i) {
            Rational lo = A.window.axes[i].lo, hi = A.window.axes[i].hi;
            // shift by a rational bound pair enclosing the translate coordinate
            if (const auto* r = std::get_if<Rational>(&g.coords[i])) {
                window.axes.push_back({lo + *r, hi + *r});
            } else {
                const auto& q = std::get<QuadElem>(g.coords[i]);
                Rational ub = rational_upper_bound(q);
                Rational lb = -rational_upper_bound(-q);
                window.axes.push_back({lo + lb, hi + ub});
            }
        }
    }
    return make_patch(A.model, std::move(out), std::move(window), A.complete);
}

FinitePatch restrict_patch(const FinitePatch& A, const Box& window) {
    std::vector<GroupPoint> out;
    for (const auto& p : A.points)
        if (window.contains(p)) out.push_back(p);
    const bool complete = A.complete && box_subset(window, A.window);
    return make_patch(A.model, std::move(out), window, complete);
}

}  // namespace meyerlab::pointsets
