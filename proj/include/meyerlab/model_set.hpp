#pragma once

#include <optional>

#include "meyerlab/finite_patch.hpp"

namespace meyerlab::pointsets {

using exactnum::Int;
using exactnum::QuadElem;

// Cut-and-project set in R x R: the lattice
//   Gamma_d = {(m + n sqrt(d), m - n sqrt(d)) : m, n integers}
// intersected with the strip R x I for a closed rational interval I (the
// internal window). Membership and enumeration are exact.
class ModelSet {
public:
    ModelSet(long d, Interval internal_window);

    const groupmodels::GroupModel& model() const { return model_; }
    long d() const { return d_; }
    const Interval& internal_window() const { return window_; }

    bool is_symmetric() const { return window_.lo == -window_.hi; }
    bool contains_identity() const { return window_.lo <= 0 && window_.hi >= 0; }

    GroupPoint lattice_point(const Int& m, const Int& n) const;
    // (m, n) if p is in the lattice; membership additionally needs the
    // internal coordinate inside the window.
    std::optional<std::pair<Int, Int>> lattice_coords(const GroupPoint& p) const;
    bool contains(const GroupPoint& p) const;

    // All points with physical coordinate in [phys.lo, phys.hi].
    std::vector<GroupPoint> enumerate_physical(const Interval& phys) const;
    // All points with |m|, |n| <= M.
    std::vector<GroupPoint> enumerate_lattice_box(long M) const;
    // Complete patch on a two-dimensional coordinate box.
    FinitePatch patch(const Box& window) const;

private:
    long d_;
    Interval window_;
    groupmodels::GroupModel model_;
};

struct CrossCheckSpec {
    Interval physical{exactnum::Rational(-12), exactnum::Rational(12)};
    int pair_sample_limit = 40;          // members sampled per factor for the sum check
    long decomposition_search_bound = 64;  // |n1| range for the splitting search
};

enum class SetOp { Product, Inverse, Power };

// Window arithmetic with a mandatory sampled cross-check: internal windows
// add under products, negate under inverse. Every sampled sum of members must
// be a member, and every sampled member of the result must split explicitly
// into members of the factors; any failure throws (it would falsify the
// window-arithmetic rule for these windows).
ModelSet modelset_product(const ModelSet& a, const ModelSet& b, const CrossCheckSpec& spec = {});
ModelSet modelset_inverse(const ModelSet& a);
ModelSet modelset_power(const ModelSet& a, int k, const CrossCheckSpec& spec = {});

// "cutproject d=<d> window=[lo,hi]"
std::string format_modelset(const ModelSet& s);
ModelSet parse_modelset(const std::string& text);

}  // namespace meyerlab::pointsets
