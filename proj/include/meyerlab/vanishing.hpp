#pragma once

#include <functional>
#include <string>
#include <vector>

#include "meyerlab/errors.hpp"
#include "meyerlab/linalg.hpp"

namespace meyerlab::zariski {

using exactnum::Int;
using exactnum::Rational;

// Exponent tuples of total degree <= bound in graded order (degree first,
// then lexicographically descending), which is also the evaluation-matrix
// column order and the pivot order of the elimination.
struct MonomialBasis {
    int vars = 0;
    int degree = 0;
    std::vector<std::vector<int>> exponents;

    static MonomialBasis up_to_degree(int vars, int degree);
    std::size_t size() const { return exponents.size(); }
};

// binomial C(n + d, d), the number of monomials
Int monomial_count(int vars, int degree);

// A polynomial of degree <= d as coefficients in the monomial basis order.
template <class F>
using Poly = std::vector<F>;

template <class F>
F eval_poly(const MonomialBasis& basis, const Poly<F>& coeffs, const std::vector<F>& point) {
    F acc = linalg::lin_zero_like(point[0]);
    for (std::size_t m = 0; m < basis.exponents.size(); ++m) {
        if (linalg::lin_is_zero(coeffs[m])) continue;
        F term = coeffs[m];
        for (int v = 0; v < basis.vars; ++v)
            for (int e = 0; e < basis.exponents[m][static_cast<std::size_t>(v)]; ++e)
                term = term * point[static_cast<std::size_t>(v)];
        acc = acc + term;
    }
    return acc;
}

// human-readable form "(c) + (c)*x0*x1^2 + ..."
template <class F>
std::string format_poly(const MonomialBasis& basis, const Poly<F>& coeffs,
                        const std::function<std::string(const F&)>& fmt) {
    std::string out;
    for (std::size_t m = 0; m < basis.exponents.size(); ++m) {
        if (linalg::lin_is_zero(coeffs[m])) continue;
        if (!out.empty()) out += " + ";
        out += "(" + fmt(coeffs[m]) + ")";
        for (int v = 0; v < basis.vars; ++v) {
            int e = basis.exponents[m][static_cast<std::size_t>(v)];
            if (e == 0) continue;
            out += "*x" + std::to_string(v);
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out.empty() ? "(0)" : out;
}

// All degree-<= d polynomials vanishing on the points: the exact kernel of
// the evaluation matrix. h(d) = C(n+d,d) - |basis| is the Hilbert value of
// the sample.
template <class F>
struct VanishingBasis {
    MonomialBasis monomials;
    std::vector<Poly<F>> basis;
    std::size_t hilbert_value = 0;
};

template <class F>
VanishingBasis<F> vanishing_basis(const std::vector<std::vector<F>>& points, int degree) {
    if (points.empty()) throw DomainMismatchError("vanishing ideal of an empty point list");
    const int vars = static_cast<int>(points[0].size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != vars)
            throw DomainMismatchError("points of mixed dimension");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw DomainMismatchError("duplicate points");

    VanishingBasis<F> out;
    out.monomials = MonomialBasis::up_to_degree(vars, degree);
    const std::size_t cols = out.monomials.size();
    linalg::Mat<F> eval(points.size(), cols, linalg::lin_zero_like(points[0][0]));
    const F one = linalg::lin_one_like(points[0][0]);
    for (std::size_t r = 0; r < points.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            F term = one;
            for (int v = 0; v < vars; ++v)
                for (int e = 0; e < out.monomials.exponents[c][static_cast<std::size_t>(v)]; ++e)
                    term = term * points[r][static_cast<std::size_t>(v)];
            eval.at(r, c) = term;
        }
    }
    out.basis = linalg::kernel_basis(std::move(eval));
    out.hilbert_value = cols - out.basis.size();
    return out;
}

enum class DensityVerdict { Granted, Refuted, Inconclusive };

template <class F>
struct DensityCertificate {
    DensityVerdict verdict = DensityVerdict::Inconclusive;
    int degree = 0;
    std::size_t sample_size = 0;
    std::optional<Poly<F>> witness;  // vanishes exactly on the whole sample
    MonomialBasis monomials;
};

// "Zariski dense up to degree d": granted only when the vanishing space is
// trivial, which forces sample_size >= C(n+d,d); a smaller sample is
// inconclusive by construction, never granted.
template <class F>
DensityCertificate<F> density_certificate(const std::vector<std::vector<F>>& points, int degree) {
    VanishingBasis<F> vb = vanishing_basis(points, degree);
    DensityCertificate<F> cert;
    cert.degree = degree;
    cert.sample_size = points.size();
    cert.monomials = vb.monomials;
    if (vb.basis.empty()) {
        cert.verdict = DensityVerdict::Granted;
        return cert;
    }
    cert.witness = vb.basis.front();
    cert.verdict = Int(points.size()) >= monomial_count(static_cast<int>(points[0].size()), degree)
                       ? DensityVerdict::Refuted
                       : DensityVerdict::Inconclusive;
    return cert;
}

template <class F>
struct AffineHull {
    std::vector<F> base;                     // first point
    std::vector<std::vector<F>> directions;  // reduced basis of differences
};

template <class F>
AffineHull<F> affine_hull(const std::vector<std::vector<F>>& points) {
    if (points.empty()) throw DomainMismatchError("affine hull of an empty point list");
    AffineHull<F> hull;
    hull.base = points[0];
    const std::size_t n = points[0].size();
    if (points.size() == 1) return hull;
    linalg::Mat<F> diffs(points.size() - 1, n, linalg::lin_zero_like(points[0][0]));
    for (std::size_t r = 1; r < points.size(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            diffs.at(r - 1, c) = points[r][c] - points[0][c];
    std::vector<std::size_t> pivots = linalg::echelon(diffs);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        std::vector<F> dir(n);
        for (std::size_t c = 0; c < n; ++c) dir[c] = diffs.at(r, c);
        // normalize on the pivot entry for determinism
        const F lead = dir[pivots[r]];
        for (auto& x : dir) x = x / lead;
        hull.directions.push_back(std::move(dir));
    }
    return hull;
}

template <class F>
bool in_affine_hull(const AffineHull<F>& hull, const std::vector<F>& point) {
    const std::size_t n = hull.base.size();
    std::vector<F> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = point[i] - hull.base[i];
    if (hull.directions.empty()) {
        for (const auto& v : rhs)
            if (!linalg::lin_is_zero(v)) return false;
        return true;
    }
    linalg::Mat<F> m(n, hull.directions.size(), linalg::lin_zero_like(rhs[0]));
    for (std::size_t j = 0; j < hull.directions.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = hull.directions[j][i];
    return linalg::solve_independent(m, rhs).has_value();
}

}  // namespace meyerlab::zariski
