#pragma once

#include "meyerlab/norms.hpp"

namespace meyerlab::pointsets {

using groupmodels::GroupModel;
using groupmodels::GroupPoint;

// A finite truncation of a discrete set. `complete` asserts that the
// represented infinite set meets the window in exactly the stored points;
// products of patches can never carry that promise and are flagged heuristic.
struct FinitePatch {
    GroupModel model;
    std::vector<GroupPoint> points;  // sorted by point_less, duplicate-free
    Box window;                      // empty axes = trivial scale (no geometry)
    bool complete = false;

    bool contains(const GroupPoint& p) const;
    bool is_symmetric() const;
    bool has_identity() const;
    std::size_t size() const { return points.size(); }
};

// Sorts, deduplicates, and checks that every point lies in the window.
FinitePatch make_patch(const GroupModel& model, std::vector<GroupPoint> points, Box window,
                       bool complete);

// Pointwise product set AB = {ab}. Window: Minkowski sum for the additive
// models, bounding box otherwise; always flagged heuristic.
FinitePatch patch_product(const FinitePatch& A, const FinitePatch& B);

FinitePatch patch_inverse(const FinitePatch& A);

// A^{-1} A, the difference set in the additive case.
FinitePatch patch_difference_set(const FinitePatch& A);

FinitePatch translate_patch(const FinitePatch& A, const GroupPoint& g);

// Stored points inside `window`, as a patch on that window. Completeness is
// inherited when the old window contains the new one.
FinitePatch restrict_patch(const FinitePatch& A, const Box& window);

}  // namespace meyerlab::pointsets
