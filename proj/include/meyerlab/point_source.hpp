#pragma once

#include <memory>

#include "meyerlab/model_set.hpp"

namespace meyerlab::pointsets {

using exactnum::Rational;

// Exact membership plus window enumeration for the discrete sets the hull and
// witness machinery ranges over. Implementations are immutable.
class PointSource {
public:
    virtual ~PointSource() = default;
    virtual const groupmodels::GroupModel& model() const = 0;
    virtual bool contains(const GroupPoint& p) const = 0;
    // All points in the window, sorted by point_less. Throws WindowError when
    // the set cannot be enumerated on a box (continuous sources).
    virtual std::vector<GroupPoint> enumerate(const Box& window) const = 0;
    virtual std::string describe() const = 0;

    FinitePatch patch(const Box& window) const;
};

using SourcePtr = std::shared_ptr<const PointSource>;

// offset + integer combinations of independent rational generator vectors
// (rank may be lower than the ambient dimension).
SourcePtr lattice_source(const groupmodels::GroupModel& model,
                         std::vector<std::vector<Rational>> generators,
                         std::vector<Rational> offset);

// Rational span of independent generators; membership is exact, enumeration
// is refused.
SourcePtr subspace_source(const groupmodels::GroupModel& model,
                          std::vector<std::vector<Rational>> generators);

SourcePtr patch_source(FinitePatch patch);

SourcePtr modelset_source(ModelSet ms);

// {(1, c n) : n integer} inside the ax+b group.
SourcePtr axb_column_source(const Rational& c);

// The set of +-(base^k), k = 0..max_exp, on the rational line (a standard
// sparse test set with unbounded difference gaps).
SourcePtr geometric_powers_source(long base, int max_exp);

}  // namespace meyerlab::pointsets
