#pragma once

#include "meyerlab/point_source.hpp"

namespace meyerlab::pointsets {

// A finite set F together with the inclusion it certifies and the scale at
// which it was verified. The inclusion is always re-checkable by exact
// membership.
struct WitnessSet {
    enum class Kind { ProductCover, CommensurabilityLeft, CommensurabilityRight };
    Kind kind = Kind::ProductCover;
    std::vector<GroupPoint> points;  // canonical order
    std::string scale_stamp;
};

struct CertificateOptions {
    exactnum::Rational physical_scale{20};     // product enumeration half-width
    exactnum::Rational pool_physical_bound{8};  // candidate pool half-width
    int scale_growth = 2;                       // factor for the stability re-run
};

// Greedy search for finite F with Lambda^2 inside F + Lambda, on a cut-and-
// project set. Preconditions (symmetry, identity) and cover failures throw
// CertificateError; success additionally requires |F| to be unchanged when
// the physical scale is enlarged once.
WitnessSet approx_subgroup_certificate(const ModelSet& lam, const CertificateOptions& opt = {});

// Same contract on an explicit finite set at trivial scale: the stored points
// are the whole set and the candidate pool is the product set itself.
WitnessSet approx_subgroup_certificate(const FinitePatch& lam);

// Source flavor: products are formed from the window sample but membership is
// exact (the infinite set answers), so subgroups come out with F = {identity}.
WitnessSet approx_subgroup_certificate(const PointSource& lam, const Box& scale_window,
                                       const CertificateOptions& opt = {});

// Exact re-verification of a product cover: every product point p admits
// f in F with f^{-1} p in Lambda. Never trusts the search.
bool verify_cover(const std::function<bool(const GroupPoint&)>& member,
                  const std::vector<GroupPoint>& witness,
                  const std::vector<GroupPoint>& product_points);

struct CommensurabilityResult {
    bool ok = false;
    WitnessSet left;   // A inside B F1
    WitnessSet right;  // B inside A F2
    std::optional<GroupPoint> uncovered;
    std::string failure;
};

struct CommensurabilityOptions {
    int scale_growth = 2;
    std::size_t pool_limit = 4000;  // candidate differences kept, canonical order
};

// Greedy covers in both directions at the given window, with one-step scale
// stability of |F1|, |F2|.
CommensurabilityResult commensurability_witness(const PointSource& a, const PointSource& b,
                                                const Box& window,
                                                const CommensurabilityOptions& opt = {});

}  // namespace meyerlab::pointsets
