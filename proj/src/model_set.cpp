#include "meyerlab/model_set.hpp"

#include <algorithm>

namespace meyerlab::pointsets {

using namespace exactnum;
using namespace groupmodels;

ModelSet::ModelSet(long d, Interval internal_window)
    : d_(d), window_(std::move(internal_window)), model_(GroupModel::additive_rn_quad(2, d)) {
    if (d_ <= 1) throw DomainMismatchError("cut-and-project parameter d must be > 1");
    if (window_.empty()) throw WindowError("empty internal window");
}

GroupPoint ModelSet::lattice_point(const Int& m, const Int& n) const {
    return quad_point(model_, {QuadElem(Rational(m), Rational(n), d_),
                               QuadElem(Rational(m), Rational(-n), d_)});
}

std::optional<std::pair<Int, Int>> ModelSet::lattice_coords(const GroupPoint& p) const {
    if (!(p.model == model_)) throw ModelMismatchError("point not in the cut-and-project plane");
    const auto& x = std::get<QuadElem>(p.coords[0]);
    const auto& y = std::get<QuadElem>(p.coords[1]);
    // x = m + n sqrt(d) forces integer components; y must be the conjugate
    if (denominator(x.a()) != 1 || denominator(x.b()) != 1) return std::nullopt;
    if (y.a() != x.a() || y.b() != -x.b()) return std::nullopt;
    return std::make_pair(numerator(x.a()), numerator(x.b()));
}

bool ModelSet::contains(const GroupPoint& p) const {
    auto mn = lattice_coords(p);
    if (!mn) return false;
    const auto& y = std::get<QuadElem>(p.coords[1]);
    return quad_compare(y, window_.lo) >= 0 && quad_compare(y, window_.hi) <= 0;
}

std::vector<GroupPoint> ModelSet::enumerate_physical(const Interval& phys) const {
    std::vector<GroupPoint> out;
    if (phys.empty()) return out;
    // x = m + n sqrt(d) in phys, y = m - n sqrt(d) in window:
    //   2m = x + y in [phys.lo + w.lo, phys.hi + w.hi]
    //   2n sqrt(d) = x - y in [phys.lo - w.hi, phys.hi - w.lo]
    const Rational two(2);
    Int m_lo = ceil_of((phys.lo + window_.lo) / two);
    Int m_hi = floor_of((phys.hi + window_.hi) / two);
    // n bounds: divide by sqrt(d) exactly: (r / (2 sqrt(d))) = r*sqrt(d)/(2d)
    auto over_sqrt = [&](const Rational& r) {
        return QuadElem(Rational(0), r / Rational(2 * d_), d_);
    };
    Int n_lo = -floor_quad(-over_sqrt(phys.lo - window_.hi));  // ceil
    Int n_hi = floor_quad(over_sqrt(phys.hi - window_.lo));
    for (Int m = m_lo; m <= m_hi; ++m) {
        for (Int n = n_lo; n <= n_hi; ++n) {
            QuadElem x(Rational(m), Rational(n), d_);
            if (quad_compare(x, phys.lo) < 0 || quad_compare(x, phys.hi) > 0) continue;
            QuadElem y = x.conjugate();
            if (quad_compare(y, window_.lo) < 0 || quad_compare(y, window_.hi) > 0) continue;
            out.push_back(quad_point(model_, {x, y}));
        }
    }
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

std::vector<GroupPoint> ModelSet::enumerate_lattice_box(long M) const {
    std::vector<GroupPoint> out;
    for (long m = -M; m <= M; ++m) {
        for (long n = -M; n <= M; ++n) {
            QuadElem y(Rational(m), Rational(-n), d_);
            if (quad_compare(y, window_.lo) < 0 || quad_compare(y, window_.hi) > 0) continue;
            out.push_back(lattice_point(Int(m), Int(n)));
        }
    }
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

FinitePatch ModelSet::patch(const Box& window) const {
    if (window.dim() != 2) throw WindowError("cut-and-project patches need a 2-d window");
    std::vector<GroupPoint> pts;
    for (auto& p : enumerate_physical(window.axes[0]))
        if (window.contains(p)) pts.push_back(p);
    return make_patch(model_, std::move(pts), window, /*complete=*/true);
}

namespace {

// Splits z (a member of the product set) as z1 + z2 with internal(z1) in w1
// and internal(z2) in w2. Existence for interior internal values follows from
// density of the lattice internals; the search is bounded and a miss is
// reported to the caller as a cross-check failure.
std::optional<GroupPoint> split_member(const ModelSet& a, const ModelSet& b, const GroupPoint& z,
                                       long search_bound) {
    const long d = a.d();
    const auto coords = a.lattice_coords(z);
    if (!coords) return std::nullopt;
    const QuadElem y = std::get<QuadElem>(z.coords[1]);
    // admissible internal values for the first part: J = w1 cap (y - w2)
    const Interval& w1 = a.internal_window();
    const Interval& w2 = b.internal_window();
    const QuadElem j_lo_q = std::max(
        QuadElem::from_rational(w1.lo, d), y - QuadElem::from_rational(w2.hi, d),
        [](const QuadElem& u, const QuadElem& v) { return quad_less(u, v); });
    const QuadElem j_hi_q = std::min(
        QuadElem::from_rational(w1.hi, d), y - QuadElem::from_rational(w2.lo, d),
        [](const QuadElem& u, const QuadElem& v) { return quad_less(u, v); });
    auto in_j = [&](const QuadElem& w) {
        return !quad_less(w, j_lo_q) && !quad_less(j_hi_q, w);
    };
    const Int m_span = floor_of(w1.width()) + 2;
    for (long k = 0; k <= search_bound; ++k) {
        for (long sn : (k == 0 ? std::vector<long>{0} : std::vector<long>{k, -k})) {
            // internal(z1) = m1 - n1 sqrt(d) must land in J
            const QuadElem shift(Rational(0), Rational(sn), d);  // n1 sqrt(d)
            const Int m_first = floor_quad(j_lo_q + shift);
            for (Int m1 = m_first; m1 <= m_first + m_span; ++m1) {
                QuadElem w(Rational(m1), Rational(-sn), d);
                if (!in_j(w)) continue;
                return a.lattice_point(m1, Int(sn));
            }
        }
    }
    return std::nullopt;
}

}  // namespace

ModelSet modelset_inverse(const ModelSet& a) { return ModelSet(a.d(), negate(a.internal_window())); }

ModelSet modelset_product(const ModelSet& a, const ModelSet& b, const CrossCheckSpec& spec) {
    if (a.d() != b.d()) throw ModelMismatchError("product of model sets over different lattices");
    ModelSet result(a.d(), minkowski_sum(a.internal_window(), b.internal_window()));

    // forward check: sampled sums of members are members
    auto pa = a.enumerate_physical(spec.physical);
    auto pb = b.enumerate_physical(spec.physical);
    const std::size_t la = std::min<std::size_t>(pa.size(), static_cast<std::size_t>(spec.pair_sample_limit));
    const std::size_t lb = std::min<std::size_t>(pb.size(), static_cast<std::size_t>(spec.pair_sample_limit));
    for (std::size_t i = 0; i < la; ++i)
        for (std::size_t j = 0; j < lb; ++j)
            if (!result.contains(multiply(pa[i], pb[j])))
                throw CertificateError("window arithmetic falsified: sum of members not a member");

    // backward check: every sampled member of the result splits explicitly
    for (const auto& z : result.enumerate_physical(spec.physical)) {
        auto z1 = split_member(a, b, z, spec.decomposition_search_bound);
        if (!z1)
            throw CertificateError("window arithmetic falsified: no decomposition for " +
                                   format_point(z));
        GroupPoint z2 = multiply(z, inverse(*z1));
        if (!a.contains(*z1) || !b.contains(z2))
            throw CertificateError("window arithmetic falsified: bad decomposition for " +
                                   format_point(z));
    }
    return result;
}

ModelSet modelset_power(const ModelSet& a, int k, const CrossCheckSpec& spec) {
    if (k < 1) throw DomainMismatchError("model-set power needs k >= 1");
    ModelSet acc = a;
    for (int i = 1; i < k; ++i) acc = modelset_product(acc, a, spec);
    return acc;
}

std::string format_modelset(const ModelSet& s) {
    return "cutproject d=" + std::to_string(s.d()) + " window=[" +
           format_rational(s.internal_window().lo) + "," +
           format_rational(s.internal_window().hi) + "]";
}

ModelSet parse_modelset(const std::string& text) {
    if (text.rfind("cutproject ", 0) != 0) throw ParseError("bad model-set literal: " + text);
    std::size_t dpos = text.find("d=");
    std::size_t wpos = text.find("window=[");
    std::size_t comma = text.find(',', wpos);
    std::size_t close = text.find(']', wpos);
    if (dpos == std::string::npos || wpos == std::string::npos || comma == std::string::npos ||
        close == std::string::npos)
        throw ParseError("bad model-set literal: " + text);
    long d = std::stol(text.substr(dpos + 2, text.find(' ', dpos) - dpos - 2));
    Rational lo = parse_rational(text.substr(wpos + 8, comma - wpos - 8));
    Rational hi = parse_rational(text.substr(comma + 1, close - comma - 1));
    return ModelSet(d, {lo, hi});
}

}  // namespace meyerlab::pointsets
