#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "meyerlab/delone.hpp"
#include "meyerlab/witness.hpp"

using namespace meyerlab;
using namespace meyerlab::exactnum;
using namespace meyerlab::groupmodels;
using namespace meyerlab::pointsets;

namespace {

std::mt19937_64 rng(0x5eed0003);

GroupModel r1 = GroupModel::additive_rn(1);
GroupModel r2 = GroupModel::additive_rn(2);

GroupPoint pt1(long x) { return rational_point(r1, {Rational(x)}); }
GroupPoint pt2(long x, long y) { return rational_point(r2, {Rational(x), Rational(y)}); }

FinitePatch int_patch(std::vector<long> xs) {
    std::vector<GroupPoint> pts;
    for (long x : xs) pts.push_back(pt1(x));
    return make_patch(r1, pts, Box{}, false);
}

SourcePtr int_lattice(long step) {
    return lattice_source(r1, {{Rational(step)}}, {Rational(0)});
}

}  // namespace

TEST_CASE("patch products over the line") {
    FinitePatch a = int_patch({-1, 0, 1});
    FinitePatch aa = patch_product(a, a);
    CHECK(aa.points.size() == 5);
    for (long v : {-2, -1, 0, 1, 2}) CHECK(aa.contains(pt1(v)));
    CHECK_FALSE(aa.complete);  // truncation cannot certify completeness
    // identity absorption and symmetry preservation
    CHECK(a.has_identity());
    for (const auto& p : a.points) CHECK(aa.contains(p));
    CHECK(a.is_symmetric());
    CHECK(aa.is_symmetric());
}

TEST_CASE("random symmetric patches have symmetric squares") {
    for (int it = 0; it < 50; ++it) {
        std::vector<GroupPoint> pts{identity(r2)};
        for (int i = 0; i < 6; ++i) {
            long x = static_cast<long>(rng() % 9) - 4;
            long y = static_cast<long>(rng() % 9) - 4;
            pts.push_back(pt2(x, y));
            pts.push_back(pt2(-x, -y));
        }
        FinitePatch p = make_patch(r2, pts, Box{}, false);
        CHECK(patch_product(p, p).is_symmetric());
    }
}

TEST_CASE("cut-and-project membership") {
    ModelSet lam(2, {Rational(-1), Rational(1)});
    // (1, 1): m = 1, n = 0
    CHECK(lam.contains(lam.lattice_point(Int(1), Int(0))));
    // (1 + sqrt(2), 1 - sqrt(2)): internal coordinate 1 - sqrt(2) in [-1, 1]
    CHECK(lam.contains(lam.lattice_point(Int(1), Int(1))));
    // (3, 3): internal coordinate 3 outside the window
    CHECK_FALSE(lam.contains(lam.lattice_point(Int(3), Int(0))));
    // non-lattice point
    GroupPoint half = quad_point(lam.model(), {QuadElem(Rational(1, 2), Rational(0), 2),
                                               QuadElem(Rational(1, 2), Rational(0), 2)});
    CHECK_FALSE(lam.contains(half));
}

TEST_CASE("model-set products follow window arithmetic, cross-checked") {
    ModelSet lam(2, {Rational(-1), Rational(1)});
    ModelSet sq = modelset_product(lam, lam);
    CHECK(sq.internal_window() == Interval{Rational(-2), Rational(2)});
    ModelSet inv = modelset_inverse(lam);
    CHECK(inv.internal_window() == lam.internal_window());  // symmetric window
    ModelSet cube = modelset_power(lam, 3);
    CHECK(cube.internal_window() == Interval{Rational(-3), Rational(3)});
    // explicit decomposition of every nearby product point was already
    // enforced inside the call; re-verify one concrete instance here
    for (const auto& z : sq.enumerate_physical({Rational(-6), Rational(6)})) {
        bool split = false;
        for (const auto& u : lam.enumerate_physical({Rational(-40), Rational(40)})) {
            GroupPoint rest = multiply(z, inverse(u));
            if (lam.contains(rest)) {
                split = true;
                break;
            }
        }
        CHECK(split);
    }
}

TEST_CASE("window arithmetic fails honestly on half-integer endpoints") {
    // (1,1) has internal coordinate 1 = 1/2 + 1/2, but 1/2 is not attained by
    // any lattice internal, so the product rule is falsified at the boundary
    ModelSet lam(2, {Rational(-1, 2), Rational(1, 2)});
    CHECK_THROWS_AS(modelset_product(lam, lam), CertificateError);
}

TEST_CASE("lattice and patch enumeration") {
    auto z2 = lattice_source(r2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}},
                             {Rational(0), Rational(0)});
    auto pts = z2->enumerate(Box::cube(2, Rational(2)));
    CHECK(pts.size() == 25);
    CHECK(z2->contains(pt2(7, -3)));
    auto row = lattice_source(r2, {{Rational(1), Rational(0)}}, {Rational(0), Rational(1)});
    CHECK(row->contains(pt2(5, 1)));
    CHECK_FALSE(row->contains(pt2(5, 0)));
    CHECK(row->enumerate(Box::cube(2, Rational(3))).size() == 7);
}

TEST_CASE("product cover certificate: explicit patch on the line") {
    WitnessSet w = approx_subgroup_certificate(int_patch({-1, 0, 1}));
    REQUIRE(w.points.size() == 3);
    CHECK(w.points[0] == pt1(0));
    CHECK(w.points[1] == pt1(1));
    CHECK(w.points[2] == pt1(-1));
}

TEST_CASE("product cover certificate: a subgroup needs only the identity") {
    auto z2 = lattice_source(r2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}},
                             {Rational(0), Rational(0)});
    WitnessSet w = approx_subgroup_certificate(*z2, Box::cube(2, Rational(6)));
    REQUIRE(w.points.size() == 1);
    CHECK(w.points[0] == identity(r2));
}

TEST_CASE("product cover certificate: cut-and-project set over sqrt(2)") {
    ModelSet lam(2, {Rational(-1), Rational(1)});
    WitnessSet w = approx_subgroup_certificate(lam);
    REQUIRE(w.points.size() == 3);
    CHECK(w.points[0] == lam.lattice_point(Int(0), Int(0)));
    // the two shifts with internal coordinates +-1
    CHECK(w.points[1] == lam.lattice_point(Int(-1), Int(0)));
    CHECK(w.points[2] == lam.lattice_point(Int(1), Int(0)));
    // interval-cover oracle: internal coordinates {-1, 0, 1} tile [-2, 2]
    // into unit-window shifts; re-verify the cover by exact membership
    ModelSet sq = modelset_product(lam, lam);
    auto products = sq.enumerate_physical({Rational(-20), Rational(20)});
    CHECK(verify_cover([&](const GroupPoint& p) { return lam.contains(p); }, w.points, products));
    // Eq-(2.1)-style consequence at k = 3: cube covered by pairwise sums of F
    ModelSet cb = modelset_power(lam, 3);
    std::vector<GroupPoint> f2;
    for (const auto& x : w.points)
        for (const auto& y : w.points) f2.push_back(multiply(x, y));
    auto cubes = cb.enumerate_physical({Rational(-12), Rational(12)});
    CHECK(verify_cover([&](const GroupPoint& p) { return lam.contains(p); }, f2, cubes));
}

TEST_CASE("certificate preconditions are enforced") {
    ModelSet asym(2, {Rational(-1), Rational(2)});
    CHECK_THROWS_AS(approx_subgroup_certificate(asym), CertificateError);
    FinitePatch no_id = int_patch({-1, 1});
    CHECK_THROWS_AS(approx_subgroup_certificate(no_id), CertificateError);
}

TEST_CASE("delone parameters of the integers") {
    FinitePatch z = int_lattice(1)->patch(Box::cube(1, Rational(10)));
    DelonePair d = delone_parameters(z, Box::cube(1, Rational(10)));
    REQUIRE(d.packing.has_value());
    CHECK(scalar_eq(*d.packing, Scalar(Rational(1))));
    REQUIRE(d.covering.has_value());
    CHECK_FALSE(d.covering_infinite);
    CHECK(scalar_eq(*d.covering, Scalar(Rational(1, 2))));
}

TEST_CASE("packing radius is translation invariant") {
    for (int it = 0; it < 30; ++it) {
        std::vector<GroupPoint> pts;
        for (int i = 0; i < 8; ++i)
            pts.push_back(pt2(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 21) - 10));
        FinitePatch p = make_patch(r2, pts, Box{}, false);
        if (p.points.size() < 2) continue;
        GroupPoint g = pt2(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 11) - 5);
        FinitePatch q = translate_patch(p, g);
        DelonePair dp = delone_parameters(p, Box{}, {});
        DelonePair dq = delone_parameters(q, Box{}, {});
        REQUIRE(dp.packing.has_value());
        REQUIRE(dq.packing.has_value());
        CHECK(scalar_eq(*dp.packing, *dq.packing));
    }
}

TEST_CASE("strip confinement shows up as an infinite covering flag") {
    ModelSet lam(2, {Rational(-1), Rational(1)});
    Box window{{{Rational(-8), Rational(8)}, {Rational(-8), Rational(8)}}};
    FinitePatch patch = lam.patch(window);
    DelonePair d = delone_parameters(patch, window, {Rational(1, 2), Rational(4)});
    CHECK(d.covering_infinite);
    REQUIRE(d.covering_witness.has_value());
    // the far probe is an absolute witness: verify its distance exceeds the cap
    auto dist = distance_to_set(*d.covering_witness, patch.points);
    CHECK(scalar_compare(*dist, Rational(4)) > 0);
}

TEST_CASE("the physical projection of the strip set covers the line") {
    ModelSet lam(2, {Rational(-1), Rational(1)});
    GroupModel proj_model = GroupModel::additive_rn_quad(1, 2);
    std::vector<GroupPoint> proj;
    for (const auto& p : lam.enumerate_physical({Rational(-30), Rational(30)}))
        proj.push_back(quad_point(proj_model, {std::get<QuadElem>(p.coords[0])}));
    FinitePatch pp = make_patch(proj_model, proj, Box{}, false);
    Box probe = Box::cube(1, Rational(20));
    DelonePair d = delone_parameters(pp, probe, {Rational(1, 4), Rational(4)});
    CHECK_FALSE(d.covering_infinite);
    // independent gap scan: the covering radius equals half the largest gap
    std::vector<double> xs;
    for (const auto& p : pp.points) xs.push_back(scalar_to_double(p.coords[0]));
    double max_gap = 0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (xs[i] >= -20.5 && xs[i + 1] <= 20.5) max_gap = std::max(max_gap, xs[i + 1] - xs[i]);
    CHECK(scalar_to_double(*d.covering) <= max_gap / 2 + 0.26);  // probe-grid quantization
}

TEST_CASE("commensurability witnesses match the hand values") {
    Box w = Box::cube(1, Rational(16));
    auto res = commensurability_witness(*int_lattice(1), *int_lattice(2), w);
    REQUIRE(res.ok);
    REQUIRE(res.left.points.size() == 2);
    CHECK(res.left.points[0] == pt1(0));
    CHECK(res.left.points[1] == pt1(1));
    REQUIRE(res.right.points.size() == 1);
    CHECK(res.right.points[0] == pt1(0));

    auto same = commensurability_witness(*int_lattice(3), *int_lattice(3), w);
    REQUIRE(same.ok);
    CHECK(same.left.points.size() == 1);
    CHECK(same.left.points[0] == pt1(0));
    CHECK(same.right.points.size() == 1);

    auto z2 = lattice_source(r2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}},
                             {Rational(0), Rational(0)});
    auto zx2z = lattice_source(r2, {{Rational(1), Rational(0)}, {Rational(0), Rational(2)}},
                               {Rational(0), Rational(0)});
    auto res2 = commensurability_witness(*z2, *zx2z, Box::cube(2, Rational(8)));
    REQUIRE(res2.ok);
    REQUIRE(res2.left.points.size() == 2);
    CHECK(res2.left.points[0] == pt2(0, 0));
    CHECK(res2.left.points[1] == pt2(0, 1));
    CHECK(res2.right.points.size() == 1);
}

TEST_CASE("commensurability witnesses compose transitively") {
    Box w = Box::cube(1, Rational(18));
    auto ab = commensurability_witness(*int_lattice(2), *int_lattice(1), w);
    auto bc = commensurability_witness(*int_lattice(1), *int_lattice(3), w);
    REQUIRE(ab.ok);
    REQUIRE(bc.ok);
    // A in B F1 and B in C F3 give A in C (F3 F1)
    std::vector<GroupPoint> composed;
    for (const auto& f3 : bc.left.points)
        for (const auto& f1 : ab.left.points) composed.push_back(multiply(f3, f1));
    auto c = int_lattice(3);
    for (const auto& a : int_lattice(2)->enumerate(Box::cube(1, Rational(12)))) {
        bool ok = false;
        for (const auto& f : composed)
            if (c->contains(multiply(a, inverse(f)))) {
                ok = true;
                break;
            }
        CHECK(ok);
    }
}

TEST_CASE("union density locator") {
    Box data = Box::cube(1, Rational(64));
    Box probes = Box::cube(1, Rational(48));
    DeloneOptions opt{Rational(1, 4), Rational(3)};
    FinitePatch two_z = int_lattice(2)->patch(data);
    FinitePatch three_z = int_lattice(3)->patch(data);
    FinitePatch powers = geometric_powers_source(2, 6)->patch(data);

    auto r1v = union_density_locator({powers, three_z}, probes, opt);
    CHECK(r1v.status == UnionDensityResult::Status::Found);
    CHECK(r1v.index == 1);  // the powers' difference set leaves growing gaps
    REQUIRE(r1v.witness.covering.has_value());

    auto r2v = union_density_locator({two_z, powers}, probes, opt);
    CHECK(r2v.status == UnionDensityResult::Status::Found);
    CHECK(r2v.index == 0);

    FinitePatch z = int_lattice(1)->patch(data);
    auto r3v = union_density_locator({z, z}, probes, opt);
    CHECK(r3v.status == UnionDensityResult::Status::Found);
    CHECK(r3v.index == 0);  // least-index tie break

    // precondition: a union that is not relatively dense is an error
    CHECK_THROWS_AS(union_density_locator({powers}, probes, opt), WindowError);
}

TEST_CASE("difference gaps of the powers grow: independent scan") {
    // justifies the locator verdict above: largest probe distance to the
    // difference set of {+-2^k} inside [-48, 48] exceeds the cap 3
    FinitePatch powers = geometric_powers_source(2, 6)->patch(Box::cube(1, Rational(64)));
    FinitePatch diff = patch_difference_set(powers);
    std::vector<double> xs;
    for (const auto& p : diff.points) xs.push_back(scalar_to_double(p.coords[0]));
    double worst = 0;
    for (double probe = -48; probe <= 48; probe += 0.25) {
        double best = 1e9;
        for (double x : xs) best = std::min(best, std::abs(probe - x));
        worst = std::max(worst, best);
    }
    CHECK(worst > 3.0);
}

TEST_CASE("coset splitting along a line") {
    // two full rows: both difference sets relatively dense in H
    std::vector<GroupPoint> pts;
    for (long k = -10; k <= 10; ++k) {
        pts.push_back(pt2(k, 0));
        pts.push_back(pt2(k, 1));
    }
    FinitePatch lam = make_patch(r2, pts, Box{}, false);
    std::vector<std::vector<Rational>> h = {{Rational(1), Rational(0)}};
    auto rep0 = pt2(0, 0);
    auto rep1 = pt2(0, 1);
    auto report = coset_split(lam, h, {rep0, rep1}, Rational(8), {Rational(1, 4), Rational(4)});
    REQUIRE(report.cosets.size() == 2);
    CHECK(report.cosets[0].relatively_dense);
    CHECK(report.cosets[1].relatively_dense);
    CHECK(report.cosets[0].count == 21);

    // sparse first coset: not relatively dense, second still is
    std::vector<GroupPoint> pts2{pt2(0, 0), pt2(5, 0)};
    for (long k = -10; k <= 10; ++k) pts2.push_back(pt2(k, 1));
    FinitePatch lam2 = make_patch(r2, pts2, Box{}, false);
    auto report2 = coset_split(lam2, h, {rep0, rep1}, Rational(8), {Rational(1, 4), Rational(2)});
    CHECK_FALSE(report2.cosets[0].relatively_dense);
    CHECK(report2.cosets[1].relatively_dense);

    // stray points are an error
    std::vector<GroupPoint> pts3{pt2(0, 0), pt2(3, 7)};
    FinitePatch lam3 = make_patch(r2, pts3, Box{}, false);
    CHECK_THROWS_AS(coset_split(lam3, h, {rep0}, Rational(8), {}), CertificateError);
}

TEST_CASE("model set text form round-trips") {
    ModelSet lam(2, {Rational(-1), Rational(1)});
    CHECK(format_modelset(lam) == "cutproject d=2 window=[-1,1]");
    ModelSet back = parse_modelset(format_modelset(lam));
    CHECK(back.d() == 2);
    CHECK(back.internal_window() == lam.internal_window());
}
