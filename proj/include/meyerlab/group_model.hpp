#pragma once

#include <string>
#include <vector>

#include "meyerlab/scalar.hpp"

namespace meyerlab::groupmodels {

using exactnum::FpSeries;
using exactnum::QuadElem;
using exactnum::Rational;
using exactnum::Scalar;

enum class ModelKind {
    AdditiveRn,      // (R^n, +), coordinates rational or in Q(sqrt(d))
    AxPlusB,         // {(a,b) : a > 0}, (a,b)*(a',b') = (a a', a b' + b)
    AdditiveSeries,  // ((F_p[[t]]/t^N)^m, +)
};

enum class ScalarDomain { RationalQ, Quad };

// Which concrete group we are in, plus enough data to validate points. Small
// value type; points carry a copy.
struct GroupModel {
    ModelKind kind = ModelKind::AdditiveRn;
    int dim = 1;                                   // n, 2, or m
    ScalarDomain domain = ScalarDomain::RationalQ; // AdditiveRn only
    long quad_d = 0;                               // field parameter when domain == Quad
    unsigned p = 0;                                // AdditiveSeries only
    int prec = 0;                                  // AdditiveSeries only

    bool operator==(const GroupModel& o) const = default;

    static GroupModel additive_rn(int n) {
        return GroupModel{ModelKind::AdditiveRn, n, ScalarDomain::RationalQ, 0, 0, 0};
    }
    static GroupModel additive_rn_quad(int n, long d) {
        return GroupModel{ModelKind::AdditiveRn, n, ScalarDomain::Quad, d, 0, 0};
    }
    static GroupModel ax_plus_b() {
        return GroupModel{ModelKind::AxPlusB, 2, ScalarDomain::RationalQ, 0, 0, 0};
    }
    static GroupModel additive_series(unsigned p, int prec, int m) {
        return GroupModel{ModelKind::AdditiveSeries, m, ScalarDomain::RationalQ, 0, p, prec};
    }
};

// "Rn:2", "Rn:2:quad(2)", "axb", "series:p=2:N=16:m=2"
GroupModel parse_model_descriptor(const std::string& text);
std::string format_model_descriptor(const GroupModel& m);

struct GroupPoint {
    GroupModel model;
    std::vector<Scalar> coords;

    bool operator==(const GroupPoint& o) const;
};

// Validates arity, the AxPlusB positivity constraint, and coordinate domains.
void check_point(const GroupPoint& g);

GroupPoint identity(const GroupModel& m);
GroupPoint multiply(const GroupPoint& g, const GroupPoint& h);
GroupPoint inverse(const GroupPoint& g);

// Convenience constructors.
GroupPoint rational_point(const GroupModel& m, std::vector<Rational> coords);
GroupPoint quad_point(const GroupModel& m, std::vector<QuadElem> coords);

// Modular function under the convention m_G(E g) = Delta(g) m_G(E),
// equivalently int f(t g) dm(t) = Delta(g)^{-1} int f dm. Exact: 1 for the
// additive models, 1/a for AxPlusB.
Rational modular_function(const GroupPoint& g);

// Deterministic structural/real order used everywhere a tie must be broken.
bool point_less(const GroupPoint& a, const GroupPoint& b);

std::string format_point(const GroupPoint& g);

}  // namespace meyerlab::groupmodels
