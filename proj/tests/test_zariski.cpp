#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "meyerlab/coset_cover.hpp"
#include "meyerlab/model_set.hpp"

using namespace meyerlab;
using namespace meyerlab::exactnum;
using namespace meyerlab::zariski;

namespace {

std::mt19937_64 rng(0x5eed0005);

using QPoint = std::vector<Rational>;

std::vector<QPoint> random_point_set(std::size_t max_size) {
    std::vector<QPoint> pts;
    std::size_t target = 1 + rng() % max_size;
    while (pts.size() < target) {
        QPoint p{Rational(static_cast<long>(rng() % 21) - 10),
                 Rational(static_cast<long>(rng() % 21) - 10)};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return pts;
}

}  // namespace

TEST_CASE("monomial bases are graded and complete") {
    MonomialBasis b = MonomialBasis::up_to_degree(2, 2);
    REQUIRE(b.size() == 6);
    CHECK(b.exponents[0] == std::vector<int>{0, 0});
    CHECK(b.exponents[1] == std::vector<int>{1, 0});
    CHECK(b.exponents[2] == std::vector<int>{0, 1});
    CHECK(b.exponents[3] == std::vector<int>{2, 0});
    CHECK(monomial_count(2, 3) == Int(10));
    CHECK(monomial_count(3, 2) == Int(10));
}

TEST_CASE("vanishing bases of small configurations") {
    // a single point at the origin: ideal generated by x, y at degree 1
    auto vb = vanishing_basis<Rational>({{Rational(0), Rational(0)}}, 1);
    CHECK(vb.basis.size() == 2);
    CHECK(vb.hilbert_value == 1);

    // three collinear points kill only y
    std::vector<QPoint> line{{Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                             {Rational(2), Rational(0)}};
    auto vb2 = vanishing_basis(line, 1);
    REQUIRE(vb2.basis.size() == 1);
    CHECK(vb2.hilbert_value == 2);
    CHECK(vb2.basis[0] == Poly<Rational>{Rational(0), Rational(0), Rational(1)});  // y

    // the 3x3 grid is dense at degree 2: exact rank 6 of the 9x6 matrix
    std::vector<QPoint> grid;
    for (long x = 0; x < 3; ++x)
        for (long y = 0; y < 3; ++y) grid.push_back({Rational(x), Rational(y)});
    auto vb3 = vanishing_basis(grid, 2);
    CHECK(vb3.basis.empty());
    CHECK(vb3.hilbert_value == 6);

    CHECK_THROWS_AS(vanishing_basis<Rational>({{Rational(1)}, {Rational(1)}}, 1),
                    DomainMismatchError);
}

TEST_CASE("density certificates") {
    std::vector<QPoint> grid;  // 5x5 patch of the integer lattice
    for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y) grid.push_back({Rational(x), Rational(y)});
    auto cert = density_certificate(grid, 3);
    CHECK(cert.verdict == DensityVerdict::Granted);

    // a vertical line is refuted at degree 1 with witness proportional to x - 1
    std::vector<QPoint> column;
    for (long n = -10; n <= 10; ++n) column.push_back({Rational(1), Rational(n)});
    auto refuted = density_certificate(column, 1);
    REQUIRE(refuted.verdict == DensityVerdict::Refuted);
    REQUIRE(refuted.witness.has_value());
    // coefficient vector check: multiples of (-1, 1, 0) in the basis [1, a, b]
    const auto& w = *refuted.witness;
    CHECK(w[2] == 0);
    CHECK(w[0] == -w[1]);
    CHECK(w[1] != 0);

    // too small a sample is inconclusive, never granted
    auto inc = density_certificate<Rational>({{Rational(0), Rational(0)}}, 1);
    CHECK(inc.verdict == DensityVerdict::Inconclusive);
}

TEST_CASE("the strip set is dense up to degree 2 over its field") {
    pointsets::ModelSet lam(2, {Rational(-1), Rational(1)});
    std::vector<std::vector<QuadElem>> pts;
    for (const auto& p : lam.enumerate_lattice_box(20))
        pts.push_back({std::get<QuadElem>(p.coords[0]), std::get<QuadElem>(p.coords[1])});
    REQUIRE(pts.size() >= 10);
    auto cert = density_certificate(pts, 2);
    CHECK(cert.verdict == DensityVerdict::Granted);
}

TEST_CASE("every basis polynomial re-evaluates to zero on every input point") {
    for (int it = 0; it < 30; ++it) {
        auto pts = random_point_set(10);
        for (int d = 1; d <= 3; ++d) {
            auto vb = vanishing_basis(pts, d);
            for (const auto& poly : vb.basis)
                for (const auto& p : pts) CHECK(eval_poly(vb.monomials, poly, p) == 0);
        }
    }
}

TEST_CASE("hilbert values behave like interpolation theory says") {
    for (int it = 0; it < 30; ++it) {
        auto pts = random_point_set(8);
        std::size_t prev = 0;
        for (int d = 0; d <= static_cast<int>(pts.size()); ++d) {
            auto vb = vanishing_basis(pts, d);
            CHECK(vb.hilbert_value >= prev);  // nondecreasing in d
            CHECK(Int(vb.hilbert_value) <= monomial_count(2, d));
            CHECK(vb.hilbert_value <= pts.size());
            if (d >= static_cast<int>(pts.size()) - 1)
                CHECK(vb.hilbert_value == pts.size());  // points are separable
            prev = vb.hilbert_value;
        }
    }
}

TEST_CASE("granted verdicts are monotone under adding points") {
    for (int it = 0; it < 20; ++it) {
        auto pts = random_point_set(12);
        for (int d = 1; d <= 2; ++d) {
            auto cert = density_certificate(pts, d);
            if (cert.verdict != DensityVerdict::Granted) continue;
            auto bigger = pts;
            QPoint extra{Rational(static_cast<long>(rng() % 41) - 20),
                         Rational(static_cast<long>(rng() % 41) - 20)};
            if (std::find(bigger.begin(), bigger.end(), extra) == bigger.end())
                bigger.push_back(extra);
            CHECK(density_certificate(bigger, d).verdict == DensityVerdict::Granted);
        }
    }
}

TEST_CASE("affine hulls") {
    std::vector<QPoint> column;
    for (long n = 0; n <= 5; ++n) column.push_back({Rational(1), Rational(n)});
    auto hull = affine_hull(column);
    CHECK(hull.base == QPoint{Rational(1), Rational(0)});
    REQUIRE(hull.directions.size() == 1);
    CHECK(hull.directions[0] == QPoint{Rational(0), Rational(1)});

    auto full = affine_hull<Rational>(
        {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK(full.directions.size() == 2);

    auto single = affine_hull<Rational>({{Rational(3), Rational(4)}});
    CHECK(single.directions.empty());
    CHECK(in_affine_hull(single, {Rational(3), Rational(4)}));
    CHECK_FALSE(in_affine_hull(single, {Rational(3), Rational(5)}));
}

TEST_CASE("coset cover of two parallel rows") {
    std::vector<QPoint> pts;
    for (long k = -10; k <= 10; ++k) {
        pts.push_back({Rational(k), Rational(0)});
        pts.push_back({Rational(k), Rational(1)});
    }
    auto cover = coset_cover_verifier(pts, 2);
    CHECK_FALSE(cover.dense);
    REQUIRE(cover.subspace.size() == 1);
    CHECK(cover.subspace[0] == QPoint{Rational(1), Rational(0)});  // H = R x {0}
    CHECK(cover.base_point == QPoint{Rational(0), Rational(0)});
    REQUIRE(cover.translates.size() == 2);
    CHECK(cover.translates[0] == QPoint{Rational(0), Rational(0)});
    CHECK(cover.translates[1] == QPoint{Rational(0), Rational(1)});
    CHECK(cover.inclusions_verified);
}

TEST_CASE("coset cover in the dense and single-flat cases") {
    std::vector<QPoint> grid;
    for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y) grid.push_back({Rational(x), Rational(y)});
    auto dense = coset_cover_verifier(grid, 2);
    CHECK(dense.dense);
    CHECK(dense.subspace.size() == 2);
    CHECK(dense.translates.size() == 1);
    CHECK(dense.inclusions_verified);

    std::vector<QPoint> column;
    for (long n = -8; n <= 8; ++n) column.push_back({Rational(1), Rational(n)});
    auto flat = coset_cover_verifier(column, 1);
    CHECK_FALSE(flat.dense);
    REQUIRE(flat.subspace.size() == 1);
    CHECK(flat.subspace[0] == QPoint{Rational(0), Rational(1)});
    CHECK(flat.translates.size() == 1);
    CHECK(flat.inclusions_verified);
}

TEST_CASE("nonlinear structure is out of the verifier's scope") {
    // points on a parabola: a definite degree-2 relation inside the "cluster"
    std::vector<QPoint> parabola;
    for (long x = -6; x <= 6; ++x) parabola.push_back({Rational(x), Rational(x * x)});
    CHECK_THROWS_AS(coset_cover_verifier(parabola, 2), CertificateError);
}
