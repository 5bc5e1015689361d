#include "meyerlab/cf_metric.hpp"

#include <algorithm>

namespace meyerlab::hull {

using namespace exactnum;
using namespace groupmodels;
using namespace pointsets;

CFConfig CFConfig::dyadic(int levels) {
    CFConfig cfg;
    Rational eps(1);
    for (int i = 0; i < levels; ++i) {
        cfg.eps_grid.push_back(eps);
        eps /= 2;
    }
    return cfg;
}

Rational CFConfig::tolerance() const {
    if (eps_grid.empty()) throw WindowError("empty matching schedule");
    return eps_grid.back() * 2;
}

namespace {

// one-sided matching: every point of p in the observation ball is within eps
// of q
bool half_match(const FinitePatch& p, const FinitePatch& q, const Rational& eps) {
    const Rational obs = Rational(1) / eps;
    for (const auto& x : p.points) {
        if (scalar_compare(maxnorm(x), obs) > 0) continue;
        auto d = distance_to_set(x, q.points);
        if (!d || scalar_compare(*d, eps) > 0) return false;
    }
    return true;
}

void require_window(const FinitePatch& p, const Rational& reach, const char* side) {
    if (!p.complete)
        throw WindowError(std::string("cf_distance needs complete patches (") + side + ")");
    if (!box_subset(Box::cube(p.model.dim, reach), p.window))
        throw WindowError(std::string("window too small for observation radius ") +
                          format_rational(reach) + " (" + side + "); widen the patch");
}

}  // namespace

Rational cf_distance(const FinitePatch& p, const FinitePatch& q, const CFConfig& cfg) {
    if (!(p.model == q.model)) throw ModelMismatchError("patches from different models");
    if (p.model.kind != groupmodels::ModelKind::AdditiveRn)
        throw ModelMismatchError("the local-matching distance needs an additive model");
    if (p.points == q.points) return Rational(0);

    std::optional<Rational> last_match;
    for (const auto& eps : cfg.eps_grid) {
        const Rational reach = Rational(1) / eps + eps;
        require_window(p, reach, "left");
        require_window(q, reach, "right");
        if (half_match(p, q, eps) && half_match(q, p, eps)) {
            last_match = eps;
        } else {
            return last_match ? *last_match : Rational(1);
        }
    }
    // matched all the way down the schedule: report the grid floor
    return *last_match;
}

CFLimitResult cf_limit_check(const std::vector<FinitePatch>& sequence, const FinitePatch& candidate,
                             const CFLimitOptions& opt) {
    CFLimitResult res;
    if (sequence.empty()) throw WindowError("empty patch sequence");
    for (const auto& f : sequence)
        if (!f.complete || !(f.window == candidate.window))
            throw WindowError("limit check needs complete patches on the candidate's window");
    if (!candidate.complete) throw WindowError("limit check needs a complete candidate");

    const Rational tol = opt.tolerance > 0 ? opt.tolerance : opt.config.tolerance();
    const std::size_t tail = opt.tail_start > 0 ? opt.tail_start : sequence.size() / 2;
    const Box inner = candidate.window.shrunk(tol);

    // (CF1): candidate points are approximated by every tail patch
    for (const auto& x : candidate.points) {
        if (!inner.contains(x)) continue;
        for (std::size_t i = tail; i < sequence.size(); ++i) {
            auto d = distance_to_set(x, sequence[i].points);
            if (!d || scalar_compare(*d, tol) > 0) {
                res.condition = "CF1";
                res.witness = x;
                res.index = i;
                return res;
            }
        }
    }
    // (CF2): tail-patch points accumulate only near the candidate
    for (std::size_t i = tail; i < sequence.size(); ++i) {
        for (const auto& y : sequence[i].points) {
            if (!inner.contains(y)) continue;
            auto d = distance_to_set(y, candidate.points);
            if (!d || scalar_compare(*d, tol) > 0) {
                res.condition = "CF2";
                res.witness = y;
                res.index = i;
                return res;
            }
        }
    }
    res.pass = true;
    return res;
}

}  // namespace meyerlab::hull
