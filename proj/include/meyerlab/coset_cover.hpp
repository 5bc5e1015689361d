#pragma once

#include "meyerlab/vanishing.hpp"

namespace meyerlab::zariski {

// Output of the subgroup-plus-finite-cover analysis of a degree-d refuted
// point set: a direction subspace H, a base point g on the densest flat, and
// one translate per cluster, with both inclusions re-verified by exact
// membership (g + H-sample inside the densest cluster's affine flat, and
// every point inside F + H).
template <class F>
struct CosetCover {
    bool dense = false;  // certificate granted: H is the whole space
    DensityCertificate<F> certificate;
    std::vector<std::vector<F>> subspace;      // direction basis of H
    std::vector<F> base_point;                 // g
    std::vector<std::vector<F>> translates;    // one representative per cluster
    std::vector<std::size_t> cluster_sizes;    // aligned with translates
    bool inclusions_verified = false;
};

namespace detail {

template <class F>
bool vector_canonical_less(const std::vector<F>& a, const std::vector<F>& b) {
    using linalg::lin_is_zero;
    using linalg::lin_less;
    using linalg::lin_sign;
    auto abs_of = [](const F& x) { return lin_sign(x) < 0 ? linalg::lin_zero_like(x) - x : x; };
    F na = abs_of(a[0]), nb = abs_of(b[0]);
    for (std::size_t i = 1; i < a.size(); ++i) {
        F ca = abs_of(a[i]);
        if (lin_less(na, ca)) na = ca;
        F cb = abs_of(b[i]);
        if (lin_less(nb, cb)) nb = cb;
    }
    if (lin_less(na, nb)) return true;
    if (lin_less(nb, na)) return false;
    int za = 0, zb = 0;
    for (const auto& x : a) za += lin_is_zero(x) ? 0 : 1;
    for (const auto& x : b) zb += lin_is_zero(x) ? 0 : 1;
    if (za != zb) return za < zb;
    for (std::size_t i = 0; i < a.size(); ++i) {
        F ca = abs_of(a[i]), cb = abs_of(b[i]);
        if (lin_less(ca, cb)) return true;
        if (lin_less(cb, ca)) return false;
        const bool neg_a = lin_sign(a[i]) < 0, neg_b = lin_sign(b[i]) < 0;
        if (neg_a != neg_b) return neg_b;
    }
    return false;
}

// p - q scaled so its first nonzero coordinate is one (a projective direction)
template <class F>
std::vector<F> normalized_direction(const std::vector<F>& p, const std::vector<F>& q) {
    std::vector<F> d(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) d[i] = p[i] - q[i];
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!linalg::lin_is_zero(d[i])) {
            const F lead = d[i];
            for (auto& x : d) x = x / lead;
            break;
        }
    }
    return d;
}

template <class F>
bool in_span(const std::vector<std::vector<F>>& basis, const std::vector<F>& v) {
    bool all_zero = true;
    for (const auto& x : v)
        if (!linalg::lin_is_zero(x)) all_zero = false;
    if (all_zero) return true;
    if (basis.empty()) return false;
    linalg::Mat<F> m(v.size(), basis.size(), linalg::lin_zero_like(v[0]));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < v.size(); ++i) m.at(i, j) = basis[j][i];
    return linalg::solve_independent(m, v).has_value();
}

}  // namespace detail

// Shape analysis in the abelian linear case. Throws CertificateError when a
// cluster shows definite nonlinear structure at degree d (its points, in flat
// coordinates, are refuted), which is outside this verifier's scope.
template <class F>
CosetCover<F> coset_cover_verifier(const std::vector<std::vector<F>>& points, int degree) {
    using detail::vector_canonical_less;
    CosetCover<F> out;
    out.certificate = density_certificate(points, degree);
    const std::size_t n = points[0].size();
    const F zero = linalg::lin_zero_like(points[0][0]);
    const F one = linalg::lin_one_like(points[0][0]);

    if (out.certificate.verdict == DensityVerdict::Granted) {
        out.dense = true;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<F> e(n, zero);
            e[i] = one;
            out.subspace.push_back(std::move(e));
        }
        out.base_point.assign(n, zero);
        out.translates.push_back(std::vector<F>(n, zero));
        out.cluster_sizes.push_back(points.size());
        out.inclusions_verified = true;
        return out;
    }

    AffineHull<F> whole = affine_hull(points);
    std::vector<std::vector<F>> h_basis;
    if (whole.directions.size() < n) {
        // the entire sample sits on one proper flat
        h_basis = whole.directions;
    } else {
        // most frequent normalized pairwise direction, ties broken canonically
        std::vector<std::vector<F>> dirs;
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                dirs.push_back(detail::normalized_direction(points[j], points[i]));
        std::sort(dirs.begin(), dirs.end(), vector_canonical_less<F>);
        std::vector<F> best;
        std::size_t best_count = 0;
        for (std::size_t i = 0; i < dirs.size();) {
            std::size_t j = i;
            while (j < dirs.size() && dirs[j] == dirs[i]) ++j;
            if (j - i > best_count) {
                best_count = j - i;
                best = dirs[i];
            }
            i = j;
        }
        if (best_count < 2)
            throw CertificateError(
                "no repeated direction: sample has no visible coset structure at this scale");
        h_basis = {best};
    }

    // cluster modulo span(h_basis); representatives are canonical-least
    std::vector<std::vector<std::size_t>> clusters;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool placed = false;
        for (auto& cl : clusters) {
            std::vector<F> diff(n);
            for (std::size_t c = 0; c < n; ++c) diff[c] = points[i][c] - points[cl[0]][c];
            if (detail::in_span(h_basis, diff)) {
                cl.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) clusters.push_back({i});
    }
    std::vector<std::pair<std::vector<F>, std::size_t>> reps;  // (rep, cluster idx)
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        std::vector<F> rep = points[clusters[c][0]];
        for (std::size_t k : clusters[c])
            if (vector_canonical_less(points[k], rep)) rep = points[k];
        reps.emplace_back(std::move(rep), c);
    }
    std::sort(reps.begin(), reps.end(),
              [](const auto& a, const auto& b) { return vector_canonical_less(a.first, b.first); });

    // H = direction space of the largest cluster's affine hull; ties go to
    // the canonically first representative
    std::size_t largest = 0;
    for (std::size_t k = 1; k < reps.size(); ++k)
        if (clusters[reps[k].second].size() > clusters[reps[largest].second].size()) largest = k;
    std::vector<std::vector<F>> big_cluster_pts;
    for (std::size_t k : clusters[reps[largest].second]) big_cluster_pts.push_back(points[k]);
    AffineHull<F> big_hull = affine_hull(big_cluster_pts);
    out.subspace = big_hull.directions;
    out.base_point = reps[largest].first;
    for (const auto& [rep, c] : reps) {
        out.translates.push_back(rep);
        out.cluster_sizes.push_back(clusters[c].size());
    }

    // candidate-flat probes: base + integer combinations of the H basis
    const std::size_t r = out.subspace.size();
    std::vector<std::vector<F>> flat_probes;
    {
        std::vector<int> combo(r, -2);
        while (r > 0) {
            std::vector<F> probe = out.base_point;
            for (std::size_t j = 0; j < r; ++j) {
                F coeff = zero;
                for (int t = 0; t < std::abs(combo[j]); ++t)
                    coeff = combo[j] > 0 ? F(coeff + one) : F(coeff - one);
                for (std::size_t i = 0; i < n; ++i)
                    probe[i] = probe[i] + coeff * out.subspace[j][i];
            }
            flat_probes.push_back(std::move(probe));
            std::size_t axis = 0;
            for (; axis < r; ++axis) {
                if (++combo[axis] <= 2) break;
                combo[axis] = -2;
            }
            if (axis == r) break;
        }
    }

    // the sample's whole degree-d ideal must vanish on the candidate flat;
    // a failing probe exposes a nonlinear closure (parabolas and friends)
    {
        VanishingBasis<F> vb = vanishing_basis(points, degree);
        for (const auto& poly : vb.basis)
            for (const auto& probe : flat_probes)
                if (!linalg::lin_is_zero(eval_poly(vb.monomials, poly, probe)))
                    throw CertificateError("nonlinear closure at degree " + std::to_string(degree) +
                                           ": out of the linear verifier's scope");
    }

    // re-verify both inclusions, never trusting the clustering:
    // (i) base + H-sample stays inside the densest cluster's affine flat
    out.inclusions_verified = true;
    for (const auto& probe : flat_probes)
        if (!in_affine_hull(big_hull, probe)) out.inclusions_verified = false;
    // (ii) every point lies in F + H
    for (const auto& p : points) {
        bool covered = false;
        for (const auto& f : out.translates) {
            std::vector<F> diff(n);
            for (std::size_t i = 0; i < n; ++i) diff[i] = p[i] - f[i];
            if (detail::in_span(out.subspace, diff)) {
                covered = true;
                break;
            }
        }
        if (!covered) out.inclusions_verified = false;
    }
    return out;
}

}  // namespace meyerlab::zariski
