#include "meyerlab/point_source.hpp"

#include <algorithm>

#include "meyerlab/linalg.hpp"

namespace meyerlab::pointsets {

using namespace exactnum;
using namespace groupmodels;
using linalg::Mat;

FinitePatch PointSource::patch(const Box& window) const {
    return make_patch(model(), enumerate(window), window, /*complete=*/true);
}

namespace {

std::vector<Rational> rational_coords(const GroupPoint& p) {
    std::vector<Rational> out;
    out.reserve(p.coords.size());
    for (const auto& c : p.coords) {
        const auto* r = std::get_if<Rational>(&c);
        if (!r) throw DomainMismatchError("rational coordinates required here");
        out.push_back(*r);
    }
    return out;
}

class LatticeSource final : public PointSource {
public:
    LatticeSource(GroupModel model, std::vector<std::vector<Rational>> gens,
                  std::vector<Rational> offset)
        : model_(std::move(model)), gens_(std::move(gens)), offset_(std::move(offset)) {
        if (model_.kind != ModelKind::AdditiveRn || model_.domain != ScalarDomain::RationalQ)
            throw ModelMismatchError("lattice sources live in rational additive models");
        const std::size_t n = static_cast<std::size_t>(model_.dim);
        if (offset_.size() != n) throw ModelMismatchError("lattice offset arity mismatch");
        for (const auto& g : gens_)
            if (g.size() != n) throw ModelMismatchError("lattice generator arity mismatch");
        Mat<Rational> m(n, gens_.size(), Rational(0));
        for (std::size_t j = 0; j < gens_.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) m.at(i, j) = gens_[j][i];
        if (linalg::rank_of(m) != gens_.size())
            throw ModelMismatchError("lattice generators must be independent");
        matrix_ = m;
    }

    const GroupModel& model() const override { return model_; }

    bool contains(const GroupPoint& p) const override {
        auto c = coefficients(p);
        if (!c) return false;
        for (const auto& v : *c)
            if (denominator(v) != 1) return false;
        return true;
    }

    std::vector<GroupPoint> enumerate(const Box& window) const override {
        if (window.trivial()) throw WindowError("cannot enumerate a lattice without a window");
        if (window.dim() != model_.dim) throw WindowError("window dimension mismatch");
        const std::size_t n = static_cast<std::size_t>(model_.dim);
        const std::size_t r = gens_.size();
        std::vector<GroupPoint> out;
        if (r == 0) {
            GroupPoint p = rational_point(model_, offset_);
            if (window.contains(p)) out.push_back(p);
            return out;
        }
        // select r coordinate rows with an invertible r x r minor
        std::vector<std::size_t> rows;
        {
            for (std::size_t i = 0; i < n && rows.size() < r; ++i) {
                Mat<Rational> trial(rows.size() + 1, r, Rational(0));
                for (std::size_t k = 0; k < rows.size(); ++k)
                    for (std::size_t j = 0; j < r; ++j) trial.at(k, j) = gens_[j][rows[k]];
                for (std::size_t j = 0; j < r; ++j) trial.at(rows.size(), j) = gens_[j][i];
                if (linalg::rank_of(trial) == rows.size() + 1) rows.push_back(i);
            }
        }
        // coefficient bounds from the corners of the selected sub-box
        Mat<Rational> sub(r, r, Rational(0));
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < r; ++j) sub.at(k, j) = gens_[j][rows[k]];
        std::vector<Rational> lo(r), hi(r);
        bool first = true;
        for (std::size_t corner = 0; corner < (1u << r); ++corner) {
            std::vector<Rational> rhs(r);
            for (std::size_t k = 0; k < r; ++k) {
                const auto& ax = window.axes[rows[k]];
                rhs[k] = ((corner >> k) & 1 ? ax.hi : ax.lo) - offset_[rows[k]];
            }
            auto c = linalg::solve_independent(sub, rhs);
            if (!c) throw Error("unreachable: invertible minor failed to solve");
            for (std::size_t k = 0; k < r; ++k) {
                if (first || (*c)[k] < lo[k]) lo[k] = (*c)[k];
                if (first || (*c)[k] > hi[k]) hi[k] = (*c)[k];
            }
            first = false;
        }
        std::vector<Int> clo(r), chi(r);
        for (std::size_t k = 0; k < r; ++k) {
            clo[k] = ceil_of(lo[k]);
            chi[k] = floor_of(hi[k]);
            if (clo[k] > chi[k]) return out;
        }
        std::vector<Int> idx = clo;
        while (true) {
            std::vector<Rational> coords = offset_;
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t i = 0; i < n; ++i) coords[i] += Rational(idx[j]) * gens_[j][i];
            GroupPoint p = rational_point(model_, coords);
            if (window.contains(p)) out.push_back(p);
            std::size_t axis = 0;
            for (; axis < r; ++axis) {
                if (++idx[axis] <= chi[axis]) break;
                idx[axis] = clo[axis];
            }
            if (axis == r) break;
        }
        std::sort(out.begin(), out.end(), point_less);
        return out;
    }

    std::string describe() const override { return "lattice rank " + std::to_string(gens_.size()); }

private:
    std::optional<std::vector<Rational>> coefficients(const GroupPoint& p) const {
        if (!(p.model == model_)) return std::nullopt;
        std::vector<Rational> rhs = rational_coords(p);
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] -= offset_[i];
        if (gens_.empty()) {
            for (const auto& v : rhs)
                if (v != 0) return std::nullopt;
            return std::vector<Rational>{};
        }
        return linalg::solve_independent(matrix_, rhs);
    }

    GroupModel model_;
    std::vector<std::vector<Rational>> gens_;
    std::vector<Rational> offset_;
    Mat<Rational> matrix_;
};

class SubspaceSource final : public PointSource {
public:
    SubspaceSource(GroupModel model, std::vector<std::vector<Rational>> gens)
        : model_(std::move(model)), gens_(std::move(gens)) {
        if (model_.kind != ModelKind::AdditiveRn || model_.domain != ScalarDomain::RationalQ)
            throw ModelMismatchError("subspace sources live in rational additive models");
        const std::size_t n = static_cast<std::size_t>(model_.dim);
        Mat<Rational> m(n, gens_.size(), Rational(0));
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            if (gens_[j].size() != n) throw ModelMismatchError("subspace generator arity mismatch");
            for (std::size_t i = 0; i < n; ++i) m.at(i, j) = gens_[j][i];
        }
        if (linalg::rank_of(m) != gens_.size())
            throw ModelMismatchError("subspace generators must be independent");
        matrix_ = m;
    }

    const GroupModel& model() const override { return model_; }

    bool contains(const GroupPoint& p) const override {
        if (!(p.model == model_)) return false;
        if (gens_.empty()) {
            for (const auto& c : p.coords)
                if (!scalar_is_zero(c)) return false;
            return true;
        }
        return linalg::solve_independent(matrix_, rational_coords(p)).has_value();
    }

    std::vector<GroupPoint> enumerate(const Box&) const override {
        throw WindowError("a positive-dimensional subspace cannot be enumerated");
    }

    std::string describe() const override {
        return "subspace dim " + std::to_string(gens_.size());
    }

private:
    GroupModel model_;
    std::vector<std::vector<Rational>> gens_;
    Mat<Rational> matrix_;
};

class PatchSource final : public PointSource {
public:
    explicit PatchSource(FinitePatch patch) : patch_(std::move(patch)) {}
    const GroupModel& model() const override { return patch_.model; }
    bool contains(const GroupPoint& p) const override { return patch_.contains(p); }
    std::vector<GroupPoint> enumerate(const Box& window) const override {
        std::vector<GroupPoint> out;
        for (const auto& p : patch_.points)
            if (window.contains(p)) out.push_back(p);
        return out;
    }
    std::string describe() const override {
        return "patch of " + std::to_string(patch_.points.size()) + " points";
    }

private:
    FinitePatch patch_;
};

class ModelSetSource final : public PointSource {
public:
    explicit ModelSetSource(ModelSet ms) : ms_(std::move(ms)) {}
    const GroupModel& model() const override { return ms_.model(); }
    bool contains(const GroupPoint& p) const override { return ms_.contains(p); }
    std::vector<GroupPoint> enumerate(const Box& window) const override {
        if (window.trivial()) throw WindowError("cannot enumerate a model set without a window");
        return ms_.patch(window).points;
    }
    std::string describe() const override { return format_modelset(ms_); }

private:
    ModelSet ms_;
};

class AxbColumnSource final : public PointSource {
public:
    explicit AxbColumnSource(Rational c) : model_(GroupModel::ax_plus_b()), c_(std::move(c)) {
        if (c_ == 0) throw DomainMismatchError("column step must be nonzero");
    }
    const GroupModel& model() const override { return model_; }
    bool contains(const GroupPoint& p) const override {
        if (!(p.model == model_)) return false;
        if (std::get<Rational>(p.coords[0]) != 1) return false;
        return denominator(Rational(std::get<Rational>(p.coords[1]) / c_)) == 1;
    }
    std::vector<GroupPoint> enumerate(const Box& window) const override {
        std::vector<GroupPoint> out;
        if (window.dim() != 2) throw WindowError("ax+b window must be two-dimensional");
        if (window.axes[0].lo > 1 || window.axes[0].hi < 1) return out;
        const Rational step = c_ > 0 ? c_ : -c_;
        for (Int n = ceil_of(window.axes[1].lo / step); n <= floor_of(window.axes[1].hi / step); ++n)
            out.push_back(rational_point(model_, {Rational(1), Rational(n) * step}));
        return out;
    }
    std::string describe() const override { return "axb column step " + format_rational(c_); }

private:
    GroupModel model_;
    Rational c_;
};

class GeometricPowersSource final : public PointSource {
public:
    GeometricPowersSource(long base, int max_exp)
        : model_(GroupModel::additive_rn(1)), base_(base), max_exp_(max_exp) {
        if (base < 2 || max_exp < 0) throw DomainMismatchError("bad geometric powers parameters");
    }
    const GroupModel& model() const override { return model_; }
    bool contains(const GroupPoint& p) const override {
        if (!(p.model == model_)) return false;
        Rational v = abs_of(std::get<Rational>(p.coords[0]));
        Rational pow(1);
        for (int k = 0; k <= max_exp_; ++k) {
            if (v == pow) return true;
            pow *= base_;
        }
        return false;
    }
    std::vector<GroupPoint> enumerate(const Box& window) const override {
        std::vector<GroupPoint> out;
        Rational pow(1);
        for (int k = 0; k <= max_exp_; ++k) {
            for (const Rational& v : {pow, Rational(-pow)}) {
                GroupPoint p = rational_point(model_, {v});
                if (window.contains(p)) out.push_back(p);
            }
            pow *= base_;
        }
        std::sort(out.begin(), out.end(), point_less);
        return out;
    }
    std::string describe() const override {
        return "powers of " + std::to_string(base_) + " up to exponent " + std::to_string(max_exp_);
    }

private:
    GroupModel model_;
    long base_;
    int max_exp_;
};

}  // namespace

SourcePtr lattice_source(const GroupModel& model, std::vector<std::vector<Rational>> generators,
                         std::vector<Rational> offset) {
    return std::make_shared<LatticeSource>(model, std::move(generators), std::move(offset));
}

SourcePtr subspace_source(const GroupModel& model, std::vector<std::vector<Rational>> generators) {
    return std::make_shared<SubspaceSource>(model, std::move(generators));
}

SourcePtr patch_source(FinitePatch patch) { return std::make_shared<PatchSource>(std::move(patch)); }

SourcePtr modelset_source(ModelSet ms) { return std::make_shared<ModelSetSource>(std::move(ms)); }

SourcePtr axb_column_source(const Rational& c) { return std::make_shared<AxbColumnSource>(c); }

SourcePtr geometric_powers_source(long base, int max_exp) {
    return std::make_shared<GeometricPowersSource>(base, max_exp);
}

}  // namespace meyerlab::pointsets
