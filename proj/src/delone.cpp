#include "meyerlab/delone.hpp"

#include <algorithm>

#include "meyerlab/linalg.hpp"

namespace meyerlab::pointsets {

using namespace exactnum;
using namespace groupmodels;
using linalg::Mat;

namespace {

// deterministic probe grid: lo, lo + delta, ... per axis, row-major scan
template <class Visit>
void scan_probes(const GroupModel& model, const Box& window, const Rational& spacing, Visit&& v) {
    const int n = window.dim();
    std::vector<Int> counts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& ax = window.axes[static_cast<std::size_t>(i)];
        if (ax.empty()) return;
        counts[static_cast<std::size_t>(i)] = floor_of(ax.width() / spacing) + 1;
    }
    std::vector<Int> idx(static_cast<std::size_t>(n), Int(0));
    while (true) {
        std::vector<Rational> coords(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            coords[static_cast<std::size_t>(i)] =
                window.axes[static_cast<std::size_t>(i)].lo +
                spacing * Rational(idx[static_cast<std::size_t>(i)]);
        if (!v(rational_point(model, coords))) return;
        int axis = n - 1;
        while (axis >= 0) {
            if (++idx[static_cast<std::size_t>(axis)] < counts[static_cast<std::size_t>(axis)]) break;
            idx[static_cast<std::size_t>(axis)] = 0;
            --axis;
        }
        if (axis < 0) return;
    }
}

struct CoverScan {
    bool hit_cap = false;
    std::optional<Scalar> max_dist;
    std::optional<GroupPoint> witness;
};

CoverScan covering_scan(const FinitePatch& patch, const Box& window, const DeloneOptions& opt) {
    CoverScan scan;
    GroupModel probe_model = patch.model;
    if (probe_model.domain == ScalarDomain::Quad) {
        // probes are rational points embedded into the quadratic field
    }
    scan_probes(probe_model, window, opt.probe_spacing, [&](const GroupPoint& probe) {
        auto dist = distance_to_set(probe, patch.points);
        if (!dist) throw WindowError("covering scan over an empty patch");
        if (scalar_compare(*dist, opt.covering_cap) > 0) {
            scan.hit_cap = true;
            scan.max_dist = *dist;
            scan.witness = probe;
            return false;  // the far probe is an absolute witness; stop
        }
        if (!scan.max_dist || scalar_less(*scan.max_dist, *dist)) {
            scan.max_dist = *dist;
            scan.witness = probe;
        }
        return true;
    });
    return scan;
}

}  // namespace

DelonePair delone_parameters(const FinitePatch& patch, const Box& window,
                             const DeloneOptions& opt) {
    if (patch.points.empty()) throw WindowError("Delone parameters of an empty set");
    DelonePair out;
    out.window = window;

    // packing: exact min pairwise distance among stored points in the window
    std::vector<GroupPoint> in_window;
    for (const auto& p : patch.points)
        if (window.contains(p)) in_window.push_back(p);
    for (std::size_t i = 0; i < in_window.size(); ++i) {
        for (std::size_t j = i + 1; j < in_window.size(); ++j) {
            Scalar d = maxnorm_diff(in_window[i], in_window[j]);
            if (!out.packing || scalar_less(d, *out.packing)) {
                out.packing = d;
                out.packing_witness = {in_window[i], in_window[j]};
            }
        }
    }

    // covering: first pass on the full window, second pass on the window
    // shrunk by the first-pass radius; a trivial window asks for packing only
    if (window.trivial()) return out;
    CoverScan pass1 = covering_scan(patch, window, opt);
    if (pass1.hit_cap) {
        out.covering_infinite = true;
        out.covering = pass1.max_dist;
        out.covering_witness = pass1.witness;
        return out;
    }
    if (!pass1.max_dist) return out;  // window too small for any probe
    Rational shrink = std::get_if<Rational>(&*pass1.max_dist)
                          ? std::get<Rational>(*pass1.max_dist)
                          : rational_upper_bound(std::get<QuadElem>(*pass1.max_dist));
    Box inner = window.shrunk(shrink);
    CoverScan pass2 = inner.empty() ? pass1 : covering_scan(patch, inner, opt);
    if (!pass2.max_dist) pass2 = pass1;
    out.covering_infinite = pass2.hit_cap;
    out.covering = pass2.max_dist;
    out.covering_witness = pass2.witness;
    return out;
}

UnionDensityResult union_density_locator(const std::vector<FinitePatch>& parts,
                                         const Box& probe_window, const DeloneOptions& opt) {
    if (parts.empty()) throw WindowError("union of zero patches");
    std::vector<GroupPoint> all;
    for (const auto& p : parts) {
        if (!(p.model == parts[0].model)) throw ModelMismatchError("mixed models in the union");
        all.insert(all.end(), p.points.begin(), p.points.end());
    }
    FinitePatch unioned = make_patch(parts[0].model, std::move(all), Box{}, false);
    DelonePair u = delone_parameters(unioned, probe_window, opt);
    if (u.covering_infinite)
        throw WindowError("union is not relatively dense at this scale; far probe " +
                          format_point(*u.covering_witness));

    UnionDensityResult res;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        FinitePatch diff = patch_difference_set(parts[i]);
        DelonePair d = delone_parameters(diff, probe_window, opt);
        if (!d.covering_infinite) {
            res.status = UnionDensityResult::Status::Found;
            res.index = i;
            res.witness = d;
            return res;
        }
    }
    res.status = UnionDensityResult::Status::ScaleInsufficient;
    return res;
}

CosetSplitReport coset_split(const FinitePatch& patch,
                             const std::vector<std::vector<Rational>>& subspace_generators,
                             const std::vector<GroupPoint>& reps, const Rational& probe_halfwidth,
                             const DeloneOptions& opt) {
    if (patch.model.kind != ModelKind::AdditiveRn || patch.model.domain != ScalarDomain::RationalQ)
        throw ModelMismatchError("coset splitting is defined on rational additive models");
    const std::size_t n = static_cast<std::size_t>(patch.model.dim);
    const std::size_t r = subspace_generators.size();
    if (r == 0) throw ModelMismatchError("subspace needs at least one generator");
    Mat<Rational> H(n, r, Rational(0));
    for (std::size_t j = 0; j < r; ++j) {
        if (subspace_generators[j].size() != n)
            throw ModelMismatchError("subspace generator arity mismatch");
        for (std::size_t i = 0; i < n; ++i) H.at(i, j) = subspace_generators[j][i];
    }
    if (linalg::rank_of(H) != r)
        throw ModelMismatchError("subspace generators must be independent");

    // H-coordinates of p - rep, or nothing if p is outside rep + H
    auto h_coords = [&](const GroupPoint& p, const GroupPoint& rep) {
        std::vector<Rational> rhs(n);
        for (std::size_t i = 0; i < n; ++i)
            rhs[i] = std::get<Rational>(p.coords[i]) - std::get<Rational>(rep.coords[i]);
        return linalg::solve_independent(H, rhs);
    };

    std::vector<std::vector<GroupPoint>> pieces(reps.size());
    std::vector<GroupPoint> stray;
    for (const auto& p : patch.points) {
        bool placed = false;
        for (std::size_t j = 0; j < reps.size() && !placed; ++j) {
            if (h_coords(p, reps[j])) {
                pieces[j].push_back(p);
                placed = true;
            }
        }
        if (!placed) stray.push_back(p);
    }
    if (!stray.empty()) {
        std::string msg = "points outside every coset:";
        for (const auto& s : stray) msg += " (" + format_point(s) + ")";
        throw CertificateError(msg);
    }

    CosetSplitReport report;
    report.subspace_window = Box::cube(static_cast<int>(r), probe_halfwidth);
    GroupModel hmodel = GroupModel::additive_rn(static_cast<int>(r));
    for (std::size_t j = 0; j < reps.size(); ++j) {
        CosetReport cr;
        cr.representative = reps[j];
        cr.count = pieces[j].size();
        // Delta_j = differences, expressed in H coordinates
        std::vector<GroupPoint> diffs;
        for (const auto& a : pieces[j])
            for (const auto& b : pieces[j]) {
                GroupPoint d = multiply(groupmodels::inverse(a), b);
                auto c = h_coords(d, identity(patch.model));
                if (!c) throw Error("unreachable: coset difference left the subspace");
                diffs.push_back(rational_point(hmodel, *c));
            }
        if (diffs.empty()) {
            cr.relatively_dense = false;
            report.cosets.push_back(std::move(cr));
            continue;
        }
        FinitePatch dpatch = make_patch(hmodel, std::move(diffs), Box{}, false);
        cr.difference_delone = delone_parameters(dpatch, report.subspace_window, opt);
        cr.relatively_dense = !cr.difference_delone.covering_infinite;
        report.cosets.push_back(std::move(cr));
    }
    return report;
}

}  // namespace meyerlab::pointsets
