#include "meyerlab/witness.hpp"

#include <algorithm>

namespace meyerlab::pointsets {

using namespace exactnum;
using namespace groupmodels;

namespace {

void sort_canonical(std::vector<GroupPoint>& pts) {
    // structural dedup first: point_less is much cheaper than the canonical
    // key, and product/difference pools carry heavy duplication
    std::sort(pts.begin(), pts.end(), point_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::sort(pts.begin(), pts.end(), canonical_less);
}

// Core greedy cover: returns the witnesses needed so that every target t has
// f with f^{-1} t in the member set. Pool and targets must be in canonical
// order already.
std::vector<GroupPoint> greedy_cover(const std::function<bool(const GroupPoint&)>& member,
                                     const std::vector<GroupPoint>& targets,
                                     const std::vector<GroupPoint>& pool,
                                     const char* failure_tag) {
    std::vector<GroupPoint> witness;
    for (const auto& t : targets) {
        bool covered = false;
        for (const auto& f : witness) {
            if (member(multiply(inverse(f), t))) {
                covered = true;
                break;
            }
        }
        if (covered) continue;
        bool found = false;
        for (const auto& f : pool) {
            if (member(multiply(inverse(f), t))) {
                witness.push_back(f);
                found = true;
                break;
            }
        }
        if (!found)
            throw CertificateError(std::string(failure_tag) + ": uncovered point " + format_point(t));
    }
    return witness;
}

std::vector<GroupPoint> modelset_cover_at_scale(const ModelSet& lam, const ModelSet& square,
                                                const Rational& scale, const Rational& pool_bound) {
    std::vector<GroupPoint> targets = square.enumerate_physical({-scale, scale});
    sort_canonical(targets);
    std::vector<GroupPoint> pool = square.enumerate_physical({-pool_bound, pool_bound});
    sort_canonical(pool);
    auto member = [&](const GroupPoint& p) { return lam.contains(p); };
    return greedy_cover(member, targets, pool, "product cover");
}

}  // namespace

bool verify_cover(const std::function<bool(const GroupPoint&)>& member,
                  const std::vector<GroupPoint>& witness,
                  const std::vector<GroupPoint>& product_points) {
    for (const auto& p : product_points) {
        bool ok = false;
        for (const auto& f : witness) {
            if (member(multiply(inverse(f), p))) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

WitnessSet approx_subgroup_certificate(const ModelSet& lam, const CertificateOptions& opt) {
    if (!lam.is_symmetric())
        throw CertificateError("set is not symmetric (internal window not centered)");
    if (!lam.contains_identity()) throw CertificateError("set does not contain the identity");

    // the product window is exact and cross-checked, never assumed
    ModelSet square = modelset_product(lam, lam, CrossCheckSpec{});
    std::vector<GroupPoint> f1 =
        modelset_cover_at_scale(lam, square, opt.physical_scale, opt.pool_physical_bound);
    std::vector<GroupPoint> f2 = modelset_cover_at_scale(
        lam, square, opt.physical_scale * opt.scale_growth, opt.pool_physical_bound);
    if (f1.size() != f2.size())
        throw CertificateError("witness count did not stabilize under scale growth (" +
                               std::to_string(f1.size()) + " vs " + std::to_string(f2.size()) + ")");
    WitnessSet w;
    w.kind = WitnessSet::Kind::ProductCover;
    w.points = std::move(f1);
    w.scale_stamp = "physical |x| <= " + format_rational(opt.physical_scale) +
                    ", stability x" + std::to_string(opt.scale_growth);
    return w;
}

WitnessSet approx_subgroup_certificate(const FinitePatch& lam) {
    if (!lam.is_symmetric()) throw CertificateError("patch is not symmetric");
    if (!lam.has_identity()) throw CertificateError("patch does not contain the identity");
    FinitePatch square = patch_product(lam, lam);
    std::vector<GroupPoint> targets = square.points;
    std::sort(targets.begin(), targets.end(), canonical_less);
    std::vector<GroupPoint> pool = targets;
    auto member = [&](const GroupPoint& p) { return lam.contains(p); };
    WitnessSet w;
    w.kind = WitnessSet::Kind::ProductCover;
    w.points = greedy_cover(member, targets, pool, "product cover");
    w.scale_stamp = "trivial (whole stored set)";
    return w;
}

WitnessSet approx_subgroup_certificate(const PointSource& lam, const Box& scale_window,
                                       const CertificateOptions& opt) {
    if (!lam.contains(identity(lam.model())))
        throw CertificateError("set does not contain the identity");
    const bool abelian = lam.model().kind != groupmodels::ModelKind::AxPlusB;
    auto cover_at = [&](const Box& w) {
        std::vector<GroupPoint> sample = lam.enumerate(w);
        for (const auto& p : sample)
            if (!lam.contains(inverse(p)))
                throw CertificateError("set is not symmetric at " + format_point(p));
        std::vector<GroupPoint> targets;
        targets.reserve(sample.size() * (sample.size() + 1) / 2);
        for (std::size_t i = 0; i < sample.size(); ++i) {
            for (std::size_t j = abelian ? i : 0; j < sample.size(); ++j)
                targets.push_back(multiply(sample[i], sample[j]));
        }
        sort_canonical(targets);
        auto member = [&](const GroupPoint& p) { return lam.contains(p); };
        return greedy_cover(member, targets, targets, "product cover");
    };
    std::vector<GroupPoint> f1 = cover_at(scale_window);
    Box grown = scale_window;
    for (auto& ax : grown.axes) {
        ax.lo *= opt.scale_growth;
        ax.hi *= opt.scale_growth;
    }
    std::vector<GroupPoint> f2 = cover_at(grown);
    if (f1.size() != f2.size())
        throw CertificateError("witness count did not stabilize under scale growth");
    WitnessSet w;
    w.kind = WitnessSet::Kind::ProductCover;
    w.points = std::move(f1);
    w.scale_stamp = format_box(scale_window) + ", stability x" + std::to_string(opt.scale_growth);
    return w;
}

namespace {

std::vector<double> approx_coords(const GroupPoint& p) {
    std::vector<double> out;
    out.reserve(p.coords.size());
    for (const auto& c : p.coords) out.push_back(scalar_to_double(c));
    return out;
}

std::vector<GroupPoint> direction_cover(const PointSource& covered, const PointSource& covering,
                                        const Box& window, std::size_t pool_limit,
                                        const char* tag, std::optional<GroupPoint>& uncovered) {
    std::vector<GroupPoint> targets = covered.enumerate(window);
    std::sort(targets.begin(), targets.end(), canonical_less);
    std::vector<GroupPoint> base = covering.enumerate(window);
    std::vector<std::vector<double>> t_approx, b_approx;
    for (const auto& a : targets) t_approx.push_back(approx_coords(a));
    for (const auto& b : base) b_approx.push_back(approx_coords(b));

    // candidate pool: b^{-1} a over window samples, small differences first;
    // the radius widens until the cover succeeds or the window is exhausted
    double window_reach = 1.0;
    for (const auto& ax : window.axes)
        window_reach = std::max(window_reach, exactnum::to_double(ax.width()));
    auto pool_at = [&](double radius) {
        std::vector<GroupPoint> pool;
        for (std::size_t i = 0; i < base.size(); ++i) {
            for (std::size_t j = 0; j < targets.size(); ++j) {
                double reach = 0;
                for (std::size_t c = 0; c < b_approx[i].size(); ++c)
                    reach = std::max(reach, std::abs(t_approx[j][c] - b_approx[i][c]));
                if (reach > radius + 0.5) continue;
                pool.push_back(multiply(inverse(base[i]), targets[j]));
            }
        }
        sort_canonical(pool);
        if (pool.size() > pool_limit) pool.resize(pool_limit);
        return pool;
    };

    // a in (covering) f  <=>  a f^{-1} in covering
    for (double radius = 2.0;; radius *= 2) {
        std::vector<GroupPoint> pool = pool_at(radius);
        std::vector<GroupPoint> witness;
        bool failed = false;
        for (const auto& a : targets) {
            bool done = false;
            for (const auto& f : witness)
                if (covering.contains(multiply(a, inverse(f)))) {
                    done = true;
                    break;
                }
            if (done) continue;
            bool found = false;
            for (const auto& f : pool)
                if (covering.contains(multiply(a, inverse(f)))) {
                    witness.push_back(f);
                    found = true;
                    break;
                }
            if (!found) {
                if (radius < window_reach) {
                    failed = true;  // widen the pool and retry
                    break;
                }
                uncovered = a;
                throw CertificateError(std::string(tag) + ": uncovered point " + format_point(a));
            }
        }
        if (!failed) return witness;
    }
}

}  // namespace

CommensurabilityResult commensurability_witness(const PointSource& a, const PointSource& b,
                                                const Box& window,
                                                const CommensurabilityOptions& opt) {
    if (!(a.model() == b.model()))
        throw ModelMismatchError("commensurability needs a common model");
    CommensurabilityResult res;
    Box grown = window;
    for (auto& ax : grown.axes) {
        ax.lo *= opt.scale_growth;
        ax.hi *= opt.scale_growth;
    }
    try {
        std::vector<GroupPoint> f1 =
            direction_cover(a, b, window, opt.pool_limit, "A in B F1", res.uncovered);
        std::vector<GroupPoint> f2 =
            direction_cover(b, a, window, opt.pool_limit, "B in A F2", res.uncovered);
        std::vector<GroupPoint> f1g =
            direction_cover(a, b, grown, opt.pool_limit, "A in B F1 (grown)", res.uncovered);
        std::vector<GroupPoint> f2g =
            direction_cover(b, a, grown, opt.pool_limit, "B in A F2 (grown)", res.uncovered);
        if (f1.size() != f1g.size() || f2.size() != f2g.size()) {
            res.failure = "witness counts did not stabilize under scale growth";
            return res;
        }
        res.left = WitnessSet{WitnessSet::Kind::CommensurabilityLeft, std::move(f1),
                              format_box(window)};
        res.right = WitnessSet{WitnessSet::Kind::CommensurabilityRight, std::move(f2),
                               format_box(window)};
        res.ok = true;
    } catch (const CertificateError& e) {
        res.failure = e.what();
    }
    return res;
}

}  // namespace meyerlab::pointsets
