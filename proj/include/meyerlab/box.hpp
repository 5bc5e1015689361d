#pragma once

#include <string>
#include <vector>

#include "meyerlab/group_model.hpp"

namespace meyerlab {

using exactnum::Rational;

// Closed interval with rational endpoints.
struct Interval {
    Rational lo, hi;
    bool empty() const { return lo > hi; }
    Rational width() const { return hi - lo; }
    bool operator==(const Interval& o) const = default;
};

inline Interval minkowski_sum(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}
inline Interval negate(const Interval& a) { return {-a.hi, -a.lo}; }
inline Interval intersect(const Interval& a, const Interval& b) {
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

// Coordinate box; all window geometry in the artifact is boxes with rational
// endpoints, membership decided exactly even for quadratic coordinates.
struct Box {
    std::vector<Interval> axes;

    int dim() const { return static_cast<int>(axes.size()); }
    // A box with no axes is the trivial "no window" stamp and contains
    // everything; empty() means some axis interval is empty.
    bool trivial() const { return axes.empty(); }
    bool empty() const {
        for (const auto& a : axes)
            if (a.empty()) return true;
        return false;
    }
    bool contains(const groupmodels::GroupPoint& g) const;
    Box shrunk(const Rational& margin) const;
    Box scaled(const Rational& factor) const;  // about the origin

    static Box cube(int dim, const Rational& halfwidth);
    bool operator==(const Box& o) const = default;
};

// inner subset of outer (a trivial outer contains everything)
bool box_subset(const Box& inner, const Box& outer);

// "[lo,hi]x[lo,hi]x..."
std::string format_box(const Box& b);
Box parse_box(const std::string& text);

}  // namespace meyerlab
