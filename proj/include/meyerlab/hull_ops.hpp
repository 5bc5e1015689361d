#pragma once

#include "meyerlab/cf_metric.hpp"
#include "meyerlab/point_source.hpp"
#include "meyerlab/witness.hpp"

namespace meyerlab::hull {

using pointsets::PointSource;
using pointsets::SourcePtr;
using pointsets::WitnessSet;

// Image of a box under left translation by g (exact; boxes map to boxes in
// both coordinate models used here).
Box translate_box(const GroupPoint& g, const Box& window);

struct HullSample {
    std::string base;                                        // source description
    std::vector<std::pair<GroupPoint, FinitePatch>> patches; // (g, gP cut to the window)
    Box window;
};

// Exact patches (g P) cut to the window, one per translate. Translates must
// have rational coordinates so window preimages stay rational boxes.
HullSample hull_sample(const PointSource& base, const std::vector<GroupPoint>& translates,
                       const Box& window);

// Searches the translate list for g with (g P) disjoint from the radius-R box
// around the identity. A hit is an absolute certificate that P is not
// relatively dense at radius R; none-found is a scale-stamped outcome.
std::optional<GroupPoint> emptiness_witness(const PointSource& base, const Rational& radius,
                                            const std::vector<GroupPoint>& translates);

struct QuasiMonotoneResult {
    enum class Status { Pass, BaseInclusionFailed, PropagationFailed };
    Status status = Status::Pass;
    std::optional<GroupPoint> witness;   // uncovered point (canonical-least)
    std::optional<GroupPoint> translate; // translate at which propagation broke
};

// Inclusion propagation: verifies P in Q F at the base window, then checks
// (g P) cut to the window stays inside (g Q) F for every sampled translate.
// Points within the max-norm diameter of F of the window boundary are exempt.
QuasiMonotoneResult quasi_monotone_check(const PointSource& p, const PointSource& q,
                                         const std::vector<GroupPoint>& witness_set,
                                         const std::vector<GroupPoint>& translates,
                                         const Box& window);

enum class SubgroupKind { Lattice, Subspace };

struct SubgroupSpec {
    SubgroupKind kind = SubgroupKind::Lattice;
    std::vector<std::vector<Rational>> generators;  // independent, rational
};

struct TranslateVerdict {
    GroupPoint translate;
    enum class Kind { Coset, Empty, Mismatch } kind = Kind::Coset;
    std::optional<GroupPoint> coset_representative;
    std::optional<GroupPoint> witness;  // mismatch point
};

struct SubgroupHullResult {
    bool pass = false;
    std::vector<TranslateVerdict> verdicts;
};

// Every sampled translate patch of the subgroup must coincide on the window
// with (k + H) for the reduction k of the translate, or be empty.
SubgroupHullResult subgroup_hull_check(const groupmodels::GroupModel& model,
                                       const SubgroupSpec& spec,
                                       const std::vector<GroupPoint>& translates, const Box& window,
                                       const Rational& probe_spacing);

}  // namespace meyerlab::hull
