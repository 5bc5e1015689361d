#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "meyerlab/hull_ops.hpp"

using namespace meyerlab;
using namespace meyerlab::exactnum;
using namespace meyerlab::groupmodels;
using namespace meyerlab::pointsets;
using namespace meyerlab::hull;

namespace {

std::mt19937_64 rng(0x5eed0004);

GroupModel r1 = GroupModel::additive_rn(1);
GroupModel r2 = GroupModel::additive_rn(2);

GroupPoint pt1(const Rational& x) { return rational_point(r1, {x}); }
GroupPoint pt2(const Rational& x, const Rational& y) { return rational_point(r2, {x, y}); }

SourcePtr int_lattice(long step, const Rational& offset = Rational(0)) {
    return lattice_source(r1, {{Rational(step)}}, {offset});
}

FinitePatch line_patch(const Rational& offset, const Rational& halfwidth) {
    return int_lattice(1, offset)->patch(Box::cube(1, halfwidth));
}

}  // namespace

TEST_CASE("cf_distance: identity, shift, and the cap") {
    FinitePatch z = line_patch(Rational(0), Rational(64));
    CHECK(cf_distance(z, z) == Rational(0));
    FinitePatch shifted = line_patch(Rational(1, 4), Rational(64));
    CHECK(cf_distance(z, shifted) == Rational(1, 4));
    CHECK(cf_distance(shifted, z) == Rational(1, 4));
    // disjoint far-separated singletons never match: cap 1
    FinitePatch a = make_patch(r1, {pt1(Rational(0))}, Box::cube(1, Rational(64)), true);
    FinitePatch b = make_patch(r1, {pt1(Rational(10))}, Box::cube(1, Rational(64)), true);
    CHECK(cf_distance(a, b) == Rational(1));
}

TEST_CASE("cf_distance symmetry on random rational patches") {
    for (int it = 0; it < 100; ++it) {
        std::vector<GroupPoint> xs, ys;
        for (int i = 0; i < 10; ++i) {
            xs.push_back(pt1(Rational(static_cast<long>(rng() % 129) - 64)));
            ys.push_back(pt1(Rational(static_cast<long>(rng() % 129) - 64)));
        }
        FinitePatch p = make_patch(r1, xs, Box::cube(1, Rational(70)), true);
        FinitePatch q = make_patch(r1, ys, Box::cube(1, Rational(70)), true);
        CFConfig grid = CFConfig::dyadic(6);  // observation radius stays inside the window
        Rational dpq = cf_distance(p, q, grid);
        CHECK(dpq == cf_distance(q, p, grid));
        if (p.points == q.points) CHECK(dpq == 0);
    }
}

TEST_CASE("cf_distance requires wide-enough complete patches") {
    FinitePatch z = line_patch(Rational(0), Rational(4));
    FinitePatch w = line_patch(Rational(1, 1024), Rational(4));
    // matching persists below the window's observation capability: must report
    CHECK_THROWS_AS(cf_distance(z, w), WindowError);
    // heuristic patches cannot back a matching verdict
    FinitePatch h = make_patch(r1, z.points, z.window, false);
    CHECK_THROWS_AS(cf_distance(h, w), WindowError);
}

TEST_CASE("matching is a bijection on the observation ball for separated patches") {
    FinitePatch z = line_patch(Rational(0), Rational(64));
    FinitePatch shifted = line_patch(Rational(1, 4), Rational(64));
    const Rational eps = cf_distance(z, shifted);  // 1/4, packing 1 > 2 eps
    const Rational obs = Rational(1) / eps;
    std::set<std::size_t> used;
    for (const auto& x : z.points) {
        if (scalar_compare(maxnorm(x), obs) > 0) continue;
        for (std::size_t i = 0; i < shifted.points.size(); ++i) {
            if (within(x, shifted.points[i], eps)) {
                CHECK(used.insert(i).second);  // never matched twice
                break;
            }
        }
    }
}

TEST_CASE("cf_limit_check: translates shrinking to the base set") {
    std::vector<FinitePatch> seq;
    for (int k = 1; k <= 13; ++k) seq.push_back(line_patch(Rational(1, 1 << k), Rational(32)));
    FinitePatch cand = line_patch(Rational(0), Rational(32));
    CFLimitOptions tail10;
    tail10.tail_start = 10;  // tail offsets 2^-11.. are below the tolerance
    auto res = cf_limit_check(seq, cand, tail10);
    CHECK(res.pass);
    // constant sequences converge to their value
    std::vector<FinitePatch> constant(5, cand);
    CHECK(cf_limit_check(constant, cand).pass);
    // a wrong candidate is rejected with a witness
    auto bad = cf_limit_check(seq, line_patch(Rational(1, 2), Rational(32)), tail10);
    CHECK_FALSE(bad.pass);
    CHECK(bad.witness.has_value());
}

TEST_CASE("cf_limit_check: vertical translates of the strip set empty out") {
    ModelSet lam(2, {Rational(-1), Rational(1)});
    auto src = modelset_source(lam);
    Box w{{{Rational(-10), Rational(10)}, {Rational(-10), Rational(10)}}};
    std::vector<GroupPoint> translates;
    for (long n = 4; n <= 40; n += 4)
        translates.push_back(quad_point(lam.model(), {QuadElem(Rational(0), Rational(0), 2),
                                                      QuadElem(Rational(n), Rational(0), 2)}));
    HullSample sample = hull_sample(*src, translates, w);
    std::vector<FinitePatch> seq;
    for (auto& [g, patch] : sample.patches) seq.push_back(patch);
    // patch counts deplete monotonically as the strip leaves the window
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        CHECK(seq[i + 1].points.size() <= seq[i].points.size());
    CHECK(seq.back().points.empty());
    FinitePatch empty_cand = make_patch(lam.model(), {}, w, true);
    CHECK(cf_limit_check(seq, empty_cand).pass);
}

TEST_CASE("union continuity on concrete sequences") {
    Box w = Box::cube(1, Rational(32));
    std::vector<FinitePatch> fs, gs, unions;
    FinitePatch f = line_patch(Rational(0), Rational(32));
    FinitePatch g = int_lattice(2, Rational(0))->patch(w);
    for (int k = 1; k <= 13; ++k) {
        FinitePatch fi = line_patch(Rational(1, 1 << k), Rational(32));
        FinitePatch gi = int_lattice(2, Rational(-1) / Rational(1 << k))->patch(w);
        std::vector<GroupPoint> u = fi.points;
        u.insert(u.end(), gi.points.begin(), gi.points.end());
        unions.push_back(make_patch(r1, u, w, true));
        fs.push_back(fi);
        gs.push_back(gi);
    }
    std::vector<GroupPoint> u = f.points;
    u.insert(u.end(), g.points.begin(), g.points.end());
    FinitePatch fg = make_patch(r1, u, w, true);
    CFLimitOptions tail10;
    tail10.tail_start = 10;
    CHECK(cf_limit_check(fs, f, tail10).pass);
    CHECK(cf_limit_check(gs, g, tail10).pass);
    CHECK(cf_limit_check(unions, fg, tail10).pass);
    // quantitative union compatibility along the sequence
    CFConfig grid = CFConfig::dyadic(5);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        Rational lhs = cf_distance(unions[i], fg, grid);
        Rational rhs = std::max(cf_distance(fs[i], f, grid), cf_distance(gs[i], g, grid));
        CHECK(lhs <= rhs + grid.tolerance());
    }
}

TEST_CASE("hull samples are exact translate patches") {
    auto z2 = lattice_source(r2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}},
                             {Rational(0), Rational(0)});
    Box w = Box::cube(2, Rational(3));
    GroupPoint half = pt2(Rational(1, 2), Rational(0));
    HullSample s = hull_sample(*z2, {identity(r2), half}, w);
    CHECK(s.patches[0].second.points.size() == 49);
    CHECK(s.patches[1].second.points.size() == 42);  // x in Z + 1/2 cap [-3,3]
    for (const auto& p : s.patches[1].second.points)
        CHECK(z2->contains(multiply(inverse(half), p)));
}

TEST_CASE("emptiness witnesses certify failure of relative density") {
    auto row = lattice_source(r2, {{Rational(1), Rational(0)}}, {Rational(0), Rational(0)});
    std::vector<GroupPoint> grid;
    for (long k = 1; k <= 16; k *= 2) {
        grid.push_back(pt2(Rational(0), Rational(k)));
        grid.push_back(pt2(Rational(0), Rational(-k)));
    }
    auto g = emptiness_witness(*row, Rational(2), grid);
    REQUIRE(g.has_value());
    CHECK(*g == pt2(Rational(0), Rational(4)));  // first grid element pushing off the ball

    auto z2 = lattice_source(r2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}},
                             {Rational(0), Rational(0)});
    CHECK_FALSE(emptiness_witness(*z2, Rational(2), grid).has_value());

    ModelSet lam(2, {Rational(-1), Rational(1)});
    std::vector<GroupPoint> vgrid;
    for (long k = 1; k <= 32; k *= 2)
        vgrid.push_back(quad_point(lam.model(), {QuadElem(Rational(0), Rational(0), 2),
                                                 QuadElem(Rational(k), Rational(0), 2)}));
    auto gm = emptiness_witness(*modelset_source(lam), Rational(5), vgrid);
    REQUIRE(gm.has_value());
    // strip confinement: the first vertical translate beyond radius + window
    CHECK(scalar_to_double(gm->coords[1]) > 6.0);
}

TEST_CASE("quasi-monotone propagation across translates") {
    auto two_z = int_lattice(2);
    auto z = int_lattice(1);
    Box w = Box::cube(1, Rational(24));
    std::vector<GroupPoint> translates;
    for (long k = -3; k <= 3; ++k) translates.push_back(pt1(Rational(2 * k + 1, 3)));

    auto ok = quasi_monotone_check(*two_z, *z, {pt1(Rational(0))}, translates, w);
    CHECK(ok.status == QuasiMonotoneResult::Status::Pass);

    auto ok2 = quasi_monotone_check(*z, *two_z, {pt1(Rational(0)), pt1(Rational(1))}, translates, w);
    CHECK(ok2.status == QuasiMonotoneResult::Status::Pass);

    auto bad = quasi_monotone_check(*z, *two_z, {pt1(Rational(0))}, translates, w);
    CHECK(bad.status == QuasiMonotoneResult::Status::BaseInclusionFailed);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == pt1(Rational(1)));  // canonical-least uncovered point
}

TEST_CASE("quasi-monotone never fails on verified random lattice pairs") {
    for (int it = 0; it < 25; ++it) {
        long k = 2 + static_cast<long>(rng() % 3);
        long c = 1 + static_cast<long>(rng() % 3);
        auto p = int_lattice(k * c);
        auto q = int_lattice(c);
        std::vector<GroupPoint> f{pt1(Rational(0))};
        std::vector<GroupPoint> translates;
        for (int t = 0; t < 5; ++t)
            translates.push_back(pt1(Rational(static_cast<long>(rng() % 41) - 20,
                                              1 + static_cast<long>(rng() % 4))));
        auto res = quasi_monotone_check(*p, *q, f, translates, Box::cube(1, Rational(30)));
        CHECK(res.status == QuasiMonotoneResult::Status::Pass);
    }
}

TEST_CASE("subgroup hulls are cosets or empty") {
    // H = Z inside R
    SubgroupSpec zline{SubgroupKind::Lattice, {{Rational(1)}}};
    std::vector<GroupPoint> ts1;
    for (long k = -4; k <= 4; ++k) ts1.push_back(pt1(Rational(2 * k + 1, 5)));
    auto r = subgroup_hull_check(r1, zline, ts1, Box::cube(1, Rational(12)), Rational(1, 5));
    CHECK(r.pass);
    for (const auto& v : r.verdicts) CHECK(v.kind == TranslateVerdict::Kind::Coset);

    // H = Z x {0} inside R^2: vertical translates give empty patches
    SubgroupSpec zrow{SubgroupKind::Lattice, {{Rational(1), Rational(0)}}};
    std::vector<GroupPoint> ts2{pt2(Rational(1, 2), Rational(0)), pt2(Rational(0), Rational(20)),
                                pt2(Rational(3), Rational(-20))};
    auto r2v = subgroup_hull_check(r2, zrow, ts2, Box::cube(2, Rational(6)), Rational(1, 2));
    CHECK(r2v.pass);
    CHECK(r2v.verdicts[0].kind == TranslateVerdict::Kind::Coset);
    CHECK(r2v.verdicts[1].kind == TranslateVerdict::Kind::Empty);
    CHECK(r2v.verdicts[2].kind == TranslateVerdict::Kind::Empty);

    // H = R x {0}: horizontal lines, exact coincidence via probes
    SubgroupSpec xaxis{SubgroupKind::Subspace, {{Rational(1), Rational(0)}}};
    std::vector<GroupPoint> ts3{pt2(Rational(7, 2), Rational(1)), pt2(Rational(0), Rational(0)),
                                pt2(Rational(-5), Rational(9))};
    auto r3v = subgroup_hull_check(r2, xaxis, ts3, Box::cube(2, Rational(6)), Rational(1, 2));
    CHECK(r3v.pass);
    CHECK(r3v.verdicts[0].kind == TranslateVerdict::Kind::Coset);
    CHECK(r3v.verdicts[2].kind == TranslateVerdict::Kind::Empty);  // line y=9 misses the window
}
