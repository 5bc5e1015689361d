#include "meyerlab/hull_ops.hpp"

#include <algorithm>

#include "meyerlab/linalg.hpp"

namespace meyerlab::hull {

using namespace exactnum;
using namespace groupmodels;
using namespace pointsets;
using linalg::Mat;

namespace {

Rational rational_coord(const GroupPoint& g, std::size_t i) {
    if (const auto* r = std::get_if<Rational>(&g.coords[i])) return *r;
    const auto& q = std::get<QuadElem>(g.coords[i]);
    if (!q.is_rational())
        throw WindowError("translate must have rational coordinates: " + format_point(g));
    return q.a();
}

}  // namespace

Box translate_box(const GroupPoint& g, const Box& window) {
    if (window.trivial()) return window;
    Box out;
    switch (g.model.kind) {
        case ModelKind::AdditiveRn: {
            for (std::size_t i = 0; i < window.axes.size(); ++i) {
                Rational s = rational_coord(g, i);
                out.axes.push_back({window.axes[i].lo + s, window.axes[i].hi + s});
            }
            return out;
        }
        case ModelKind::AxPlusB: {
            // (a,b) -> (alpha a, alpha b + beta): axis-aligned boxes map to boxes
            const Rational alpha = rational_coord(g, 0);
            const Rational beta = rational_coord(g, 1);
            out.axes.push_back({window.axes[0].lo * alpha, window.axes[0].hi * alpha});
            Rational b1 = window.axes[1].lo * alpha + beta;
            Rational b2 = window.axes[1].hi * alpha + beta;
            out.axes.push_back({std::min(b1, b2), std::max(b1, b2)});
            return out;
        }
        case ModelKind::AdditiveSeries:
            throw ModelMismatchError("series models have no window geometry");
    }
    throw Error("unreachable");
}

HullSample hull_sample(const PointSource& base, const std::vector<GroupPoint>& translates,
                       const Box& window) {
    HullSample sample;
    sample.base = base.describe();
    sample.window = window;
    for (const auto& g : translates) {
        Box preimage = translate_box(groupmodels::inverse(g), window);
        std::vector<GroupPoint> pts;
        for (const auto& x : base.enumerate(preimage)) {
            GroupPoint y = multiply(g, x);
            if (window.contains(y)) pts.push_back(y);
        }
        sample.patches.emplace_back(g, make_patch(base.model(), std::move(pts), window, true));
    }
    return sample;
}

std::optional<GroupPoint> emptiness_witness(const PointSource& base, const Rational& radius,
                                            const std::vector<GroupPoint>& translates) {
    const GroupModel& m = base.model();
    Box ball;
    if (m.kind == ModelKind::AxPlusB) {
        Rational lo = Rational(1) - radius;
        if (lo < 0) lo = Rational(0);
        ball.axes = {{lo, Rational(1) + radius}, {-radius, radius}};
    } else {
        ball = Box::cube(m.dim, radius);
    }
    for (const auto& g : translates) {
        Box preimage = translate_box(groupmodels::inverse(g), ball);
        if (base.enumerate(preimage).empty()) return g;
    }
    return std::nullopt;
}

namespace {

Rational witness_diameter(const std::vector<GroupPoint>& f) {
    Rational diam(0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            Scalar d = maxnorm_diff(f[i], f[j]);
            Rational ub = std::get_if<Rational>(&d)
                              ? std::get<Rational>(d)
                              : rational_upper_bound(std::get<QuadElem>(d));
            diam = std::max(diam, ub);
        }
    }
    return diam;
}

std::optional<GroupPoint> uncovered_point(const PointSource& q,
                                          const std::vector<GroupPoint>& witness_set,
                                          std::vector<GroupPoint> pts, const GroupPoint& g) {
    std::sort(pts.begin(), pts.end(), canonical_less);
    const GroupPoint ginv = groupmodels::inverse(g);
    for (const auto& p : pts) {
        bool ok = false;
        for (const auto& f : witness_set) {
            // p in (gQ) f  <=>  g^{-1} p f^{-1} in Q
            if (q.contains(multiply(multiply(ginv, p), groupmodels::inverse(f)))) {
                ok = true;
                break;
            }
        }
        if (!ok) return p;
    }
    return std::nullopt;
}

}  // namespace

QuasiMonotoneResult quasi_monotone_check(const PointSource& p, const PointSource& q,
                                         const std::vector<GroupPoint>& witness_set,
                                         const std::vector<GroupPoint>& translates,
                                         const Box& window) {
    if (!(p.model() == q.model())) throw ModelMismatchError("sets from different models");
    QuasiMonotoneResult res;
    // base inclusion P subset of Q F at window scale
    if (auto bad = uncovered_point(q, witness_set, p.enumerate(window), identity(p.model()))) {
        res.status = QuasiMonotoneResult::Status::BaseInclusionFailed;
        res.witness = bad;
        return res;
    }
    const Rational margin = witness_diameter(witness_set);
    const Box inner = window.shrunk(margin);
    for (const auto& g : translates) {
        Box preimage = translate_box(groupmodels::inverse(g), inner);
        std::vector<GroupPoint> pts;
        for (const auto& x : p.enumerate(preimage)) pts.push_back(multiply(g, x));
        if (auto bad = uncovered_point(q, witness_set, std::move(pts), g)) {
            res.status = QuasiMonotoneResult::Status::PropagationFailed;
            res.witness = bad;
            res.translate = g;
            return res;
        }
    }
    res.status = QuasiMonotoneResult::Status::Pass;
    return res;
}

namespace {

// g = (integer/real combination of generators) + k with k the canonical
// remainder: lattice combinations are rounded, subspace combinations removed.
GroupPoint reduce_mod_subgroup(const GroupModel& model, const SubgroupSpec& spec,
                               const GroupPoint& g) {
    const std::size_t n = static_cast<std::size_t>(model.dim);
    const std::size_t r = spec.generators.size();
    // coordinates of g in (generators + greedy standard-basis completion)
    Mat<Rational> basis(n, n, Rational(0));
    std::size_t col = 0;
    for (; col < r; ++col)
        for (std::size_t i = 0; i < n; ++i) basis.at(i, col) = spec.generators[col][i];
    for (std::size_t e = 0; e < n && col < n; ++e) {
        Mat<Rational> trial = basis;
        trial.at(e, col) = Rational(1);
        Mat<Rational> sub(n, col + 1, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= col; ++j) sub.at(i, j) = trial.at(i, j);
        if (linalg::rank_of(sub) == col + 1) {
            basis = trial;
            ++col;
        }
    }
    if (col < n) throw ModelMismatchError("degenerate subgroup spec");
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = rational_coord(g, i);
    auto c = linalg::solve_independent(basis, rhs);
    if (!c) throw Error("unreachable: full basis failed to solve");
    std::vector<Rational> k(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        k[i] = rhs[i];
        for (std::size_t j = 0; j < r; ++j) {
            Rational coeff = spec.kind == SubgroupKind::Lattice
                                 ? Rational(round_half_up((*c)[j]))
                                 : (*c)[j];
            k[i] -= coeff * spec.generators[j][i];
        }
    }
    return rational_point(model, k);
}

// exact emptiness of (k + H) cap window for the supported subspace ranks
bool subspace_coset_empty(const GroupModel& model, const SubgroupSpec& spec, const GroupPoint& k,
                          const Box& window) {
    const std::size_t n = static_cast<std::size_t>(model.dim);
    const std::size_t r = spec.generators.size();
    if (r == n) return false;  // full space
    if (r == 1) {
        // one free parameter: intersect the per-axis constraints on it
        std::optional<Rational> lo, hi;
        for (std::size_t i = 0; i < n; ++i) {
            const Rational gi = spec.generators[0][i];
            const Rational ki = rational_coord(k, i);
            const auto& ax = window.axes[i];
            if (gi == 0) {
                if (ki < ax.lo || ki > ax.hi) return true;
                continue;
            }
            Rational c1 = (ax.lo - ki) / gi, c2 = (ax.hi - ki) / gi;
            Rational clo = std::min(c1, c2), chi = std::max(c1, c2);
            if (!lo || clo > *lo) lo = clo;
            if (!hi || chi < *hi) hi = chi;
        }
        return lo && hi && *lo > *hi;
    }
    throw ModelMismatchError("emptiness decision implemented for subspace rank 1 or full rank");
}

}  // namespace

SubgroupHullResult subgroup_hull_check(const GroupModel& model, const SubgroupSpec& spec,
                                       const std::vector<GroupPoint>& translates, const Box& window,
                                       const Rational& probe_spacing) {
    if (model.kind != ModelKind::AdditiveRn || model.domain != ScalarDomain::RationalQ)
        throw ModelMismatchError("subgroup hull check lives in rational additive models");
    SubgroupHullResult out;
    out.pass = true;

    SourcePtr h = spec.kind == SubgroupKind::Lattice
                      ? lattice_source(model, spec.generators,
                                       std::vector<Rational>(static_cast<std::size_t>(model.dim),
                                                             Rational(0)))
                      : subspace_source(model, spec.generators);

    for (const auto& g : translates) {
        TranslateVerdict v;
        v.translate = g;
        GroupPoint k = reduce_mod_subgroup(model, spec, g);
        // g - k must land in H; this is the exactness of the reduction
        GroupPoint residue = multiply(groupmodels::inverse(k), g);
        if (!h->contains(residue)) {
            v.kind = TranslateVerdict::Kind::Mismatch;
            v.witness = residue;
            out.pass = false;
            out.verdicts.push_back(std::move(v));
            continue;
        }
        if (spec.kind == SubgroupKind::Lattice) {
            // exact patch equality: (g + H) and (k + H) enumerated on the window
            auto via_g = hull_sample(*h, {g}, window).patches[0].second;
            auto via_k = hull_sample(*h, {k}, window).patches[0].second;
            if (!(via_g.points == via_k.points)) {
                v.kind = TranslateVerdict::Kind::Mismatch;
                out.pass = false;
            } else if (via_g.points.empty()) {
                v.kind = TranslateVerdict::Kind::Empty;
            } else {
                v.kind = TranslateVerdict::Kind::Coset;
                v.coset_representative = k;
            }
        } else {
            if (subspace_coset_empty(model, spec, k, window)) {
                v.kind = TranslateVerdict::Kind::Empty;
            } else {
                // membership agreement between gH and kH on the probe grid
                v.kind = TranslateVerdict::Kind::Coset;
                v.coset_representative = k;
                bool mismatch = false;
                const int n = window.dim();
                std::vector<Int> counts(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i)
                    counts[static_cast<std::size_t>(i)] =
                        floor_of(window.axes[static_cast<std::size_t>(i)].width() / probe_spacing) + 1;
                std::vector<Int> idx(static_cast<std::size_t>(n), Int(0));
                while (!mismatch) {
                    std::vector<Rational> coords(static_cast<std::size_t>(n));
                    for (int i = 0; i < n; ++i)
                        coords[static_cast<std::size_t>(i)] =
                            window.axes[static_cast<std::size_t>(i)].lo +
                            probe_spacing * Rational(idx[static_cast<std::size_t>(i)]);
                    GroupPoint probe = rational_point(model, coords);
                    const bool in_g = h->contains(multiply(groupmodels::inverse(g), probe));
                    const bool in_k = h->contains(multiply(groupmodels::inverse(k), probe));
                    if (in_g != in_k) {
                        mismatch = true;
                        v.kind = TranslateVerdict::Kind::Mismatch;
                        v.witness = probe;
                        out.pass = false;
                        break;
                    }
                    int axis = n - 1;
                    while (axis >= 0) {
                        if (++idx[static_cast<std::size_t>(axis)] <
                            counts[static_cast<std::size_t>(axis)])
                            break;
                        idx[static_cast<std::size_t>(axis)] = 0;
                        --axis;
                    }
                    if (axis < 0) break;
                }
            }
        }
        out.verdicts.push_back(std::move(v));
    }
    return out;
}

}  // namespace meyerlab::hull
