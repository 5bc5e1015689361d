#pragma once

#include "meyerlab/finite_patch.hpp"

namespace meyerlab::hull {

using exactnum::Rational;
using groupmodels::GroupPoint;
using pointsets::FinitePatch;

// Matching schedule for the local-matching distance: two patches are
// eps-close when each one, inside the observation ball of radius 1/eps,
// is covered by eps-balls around the other. The grid is scanned from the
// largest radius down; non-matching pairs get the cap 1. This is a
// quasi-metric: symmetry and vanishing on equal patches are asserted, the
// triangle inequality is not claimed.
struct CFConfig {
    std::vector<Rational> eps_grid;  // strictly decreasing, positive
    static CFConfig dyadic(int levels = 12);
    Rational tolerance() const;  // 2 * smallest grid radius
};

// Smallest grid radius at which the patches match, 0 for equal patches, 1
// when nothing matches. Throws WindowError when a verdict would need patch
// data beyond a complete window (caller must widen).
Rational cf_distance(const FinitePatch& p, const FinitePatch& q, const CFConfig& cfg = CFConfig::dyadic());

struct CFLimitOptions {
    std::size_t tail_start = 0;       // 0 = second half of the sequence
    Rational tolerance{0};            // 0 = config default
    CFConfig config = CFConfig::dyadic();
};

struct CFLimitResult {
    bool pass = false;
    // on failure: which condition broke, the witness point, and the patch index
    std::string condition;
    std::optional<GroupPoint> witness;
    std::size_t index = 0;
};

// Window-scale convergence check: every candidate point is tol-approximated
// in every tail patch, and every tail-patch point is tol-close to the
// candidate; both restricted to the window shrunk by tol.
CFLimitResult cf_limit_check(const std::vector<FinitePatch>& sequence, const FinitePatch& candidate,
                             const CFLimitOptions& opt = {});

}  // namespace meyerlab::hull
