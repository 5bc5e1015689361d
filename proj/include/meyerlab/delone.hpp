#pragma once

#include "meyerlab/finite_patch.hpp"

namespace meyerlab::pointsets {

using exactnum::Rational;
using exactnum::Scalar;

struct DeloneOptions {
    Rational probe_spacing{1, 4};
    Rational covering_cap{64};
};

// Scale-qualified Delone data: r is exact; R is the max over a deterministic
// probe grid of the distance to the nearest stored point, measured on the
// window shrunk by the first-pass value to suppress edge effects. A probe
// beyond the cap yields the infinite flag with that probe as an absolute
// witness for this scale.
struct DelonePair {
    std::optional<Scalar> packing;  // min pairwise distance; empty below 2 points
    std::optional<std::pair<GroupPoint, GroupPoint>> packing_witness;
    bool covering_infinite = false;
    std::optional<Scalar> covering;
    std::optional<GroupPoint> covering_witness;  // extremal probe, or the far probe
    Box window;
};

DelonePair delone_parameters(const FinitePatch& patch, const Box& window,
                             const DeloneOptions& opt = {});

struct UnionDensityResult {
    enum class Status { Found, ScaleInsufficient };
    Status status = Status::ScaleInsufficient;
    std::size_t index = 0;  // least i with P_i^{-1} P_i covering at this scale
    DelonePair witness;
};

// Lemma-2.4-style locator: assumes the union is relatively dense at the probe
// window (checked; WindowError otherwise) and returns the least index whose
// difference set has a finite covering radius there.
UnionDensityResult union_density_locator(const std::vector<FinitePatch>& parts,
                                         const Box& probe_window, const DeloneOptions& opt = {});

struct CosetReport {
    GroupPoint representative;
    std::size_t count = 0;              // points of the coset piece
    DelonePair difference_delone;       // of Delta_j, in subspace coordinates
    bool relatively_dense = false;      // finite covering radius at the scale
};

struct CosetSplitReport {
    std::vector<CosetReport> cosets;
    Box subspace_window;  // probe window used inside H, in H coordinates
};

// Splits an additive patch along cosets reps[j] + H, forms the difference
// sets Delta_j inside the subspace H, and measures their Delone parameters in
// H coordinates. Stray points (covered by no coset) are an error.
CosetSplitReport coset_split(const FinitePatch& patch,
                             const std::vector<std::vector<Rational>>& subspace_generators,
                             const std::vector<GroupPoint>& reps, const Rational& probe_halfwidth,
                             const DeloneOptions& opt = {});

}  // namespace meyerlab::pointsets
