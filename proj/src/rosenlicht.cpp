#include "meyerlab/rosenlicht.hpp"

#include <algorithm>

namespace meyerlab::charp {

using meyerlab::PrecisionError;

Fp Fp::operator/(const Fp& o) const {
    if (o.v == 0) throw DivisionByZeroError("division by zero in F_p");
    for (unsigned x = 1; x < p; ++x)
        if (o.v * x % p == 1) return *this * Fp{x, p};
    throw DivisionByZeroError("no inverse in F_p");
}

namespace {
bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}
}  // namespace

RosenlichtSolutionSpace rosenlicht_solve(unsigned p, int precision) {
    if (!is_prime(p)) throw DomainMismatchError("characteristic must be prime");
    if (precision < 1) throw PrecisionError("precision must be >= 1");
    const std::size_t n = static_cast<std::size_t>(precision);
    // columns: a_0..a_{N-1}, b_0..b_{N-1}; one row per coefficient constraint
    linalg::Mat<Fp> m(n, 2 * n, Fp{0, p});
    for (std::size_t j = 0; j < n; ++j) {
        m.at(j, j) = Fp{1, p};  // +a_j
        if (j >= 1 && (j - 1) % p == 0) {
            const std::size_t src = (j - 1) / p;
            m.at(j, src) = m.at(j, src) - Fp{1, p};  // -a_{(j-1)/p}
        }
        if (j % p == 0) {
            const std::size_t src = j / p;
            m.at(j, n + src) = m.at(j, n + src) + Fp{1, p};  // +b_{j/p}
        }
    }
    RosenlichtSolutionSpace out;
    out.p = p;
    out.precision = precision;
    for (const auto& vec : linalg::kernel_basis(std::move(m))) {
        auto pair = pair_from_coefficients(p, precision, vec);
        if (!rosenlicht_residual(pair.first, pair.second).is_zero())
            throw Error("solver produced a non-solution; constraint assembly broken");
        out.basis.push_back(std::move(pair));
    }
    out.dimension = out.basis.size();
    return out;
}

std::pair<FpSeries, FpSeries> pair_from_coefficients(unsigned p, int precision,
                                                     const std::vector<Fp>& coeffs) {
    const std::size_t n = static_cast<std::size_t>(precision);
    std::vector<unsigned> xa(n), yb(n);
    for (std::size_t i = 0; i < n; ++i) {
        xa[i] = coeffs[i].v;
        yb[i] = coeffs[n + i].v;
    }
    return {FpSeries(p, precision, 0, std::move(xa)), FpSeries(p, precision, 0, std::move(yb))};
}

FpSeries rosenlicht_residual(const FpSeries& x, const FpSeries& y) {
    const unsigned p = x.p();
    const int prec = std::min(x.precision(), y.precision());
    const FpSeries t = FpSeries::monomial(p, prec, 1, 1);
    auto power = [&](const FpSeries& s) {
        // s^p without the frobenius precision guard: zero when everything
        // truncates away
        if (s.is_zero() || static_cast<int>(p) * s.valuation() >= s.precision())
            return FpSeries::zero(p, s.precision());
        return s.frobenius();
    };
    return power(y) - (t * power(x) - x);
}

std::vector<std::pair<FpSeries, FpSeries>> rosenlicht_enumerate(unsigned p, int precision) {
    const std::size_t n = static_cast<std::size_t>(precision);
    std::vector<std::pair<FpSeries, FpSeries>> out;
    std::vector<unsigned> digits(2 * n, 0);
    while (true) {
        std::vector<unsigned> xa(digits.begin(), digits.begin() + static_cast<long>(n));
        std::vector<unsigned> yb(digits.begin() + static_cast<long>(n), digits.end());
        FpSeries x(p, precision, 0, std::move(xa));
        FpSeries y(p, precision, 0, std::move(yb));
        if (rosenlicht_residual(x, y).is_zero()) out.emplace_back(std::move(x), std::move(y));
        std::size_t i = 0;
        for (; i < digits.size(); ++i) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
        if (i == digits.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<FpSeries, FpSeries>> span_members(const RosenlichtSolutionSpace& s) {
    std::vector<std::pair<FpSeries, FpSeries>> out;
    std::vector<unsigned> digits(s.dimension, 0);
    const FpSeries zero = FpSeries::zero(s.p, s.precision);
    while (true) {
        FpSeries x = zero, y = zero;
        for (std::size_t i = 0; i < s.dimension; ++i) {
            for (unsigned rep = 0; rep < digits[i]; ++rep) {
                x = x + s.basis[i].first;
                y = y + s.basis[i].second;
            }
        }
        out.emplace_back(std::move(x), std::move(y));
        std::size_t i = 0;
        for (; i < digits.size(); ++i) {
            if (++digits[i] < s.p) break;
            digits[i] = 0;
        }
        if (i == digits.size()) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LaurentSearchReport laurent_pole_search(unsigned p, int V, int support_top) {
    if (!is_prime(p)) throw DomainMismatchError("characteristic must be prime");
    if (V < 1 || V > FpSeries::kValuationFloor / static_cast<int>(p))
        throw PrecisionError("pole depth out of the representable range");
    LaurentSearchReport report;
    report.p = p;
    report.valuation_floor = -V;
    report.support_top = support_top;
    report.check_precision = support_top;
    // work precision keeps every product term below the check order exact
    const int work_prec = static_cast<int>(p) * (support_top + V) + 2;
    const std::size_t width = static_cast<std::size_t>(V + support_top);
    std::vector<unsigned> digits(2 * width, 0);
    while (true) {
        // digits hold coefficients at indices -V..support_top-1 for x, then y;
        // only candidates with an actual pole are of interest
        bool has_pole = false;
        for (std::size_t i = 0; i < 2 * width; ++i) {
            const std::size_t pos = i % width;
            if (digits[i] != 0 && static_cast<int>(pos) < V) has_pole = true;
        }
        if (has_pole) {
            ++report.candidates;
            std::vector<unsigned> xa(digits.begin(), digits.begin() + static_cast<long>(width));
            std::vector<unsigned> yb(digits.begin() + static_cast<long>(width), digits.end());
            FpSeries x(p, work_prec, -V, std::move(xa));
            FpSeries y(p, work_prec, -V, std::move(yb));
            FpSeries residual = rosenlicht_residual(x, y);
            const bool solves =
                residual.is_zero() || residual.valuation() >= report.check_precision;
            if (solves) report.solutions.emplace_back(std::move(x), std::move(y));
        }
        std::size_t i = 0;
        for (; i < digits.size(); ++i) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
        if (i == digits.size()) break;
    }
    return report;
}

GrowthReport rosenlicht_growth(unsigned p, int n_lo, int n_hi, int V, int support_top) {
    if (n_lo > n_hi) throw PrecisionError("empty precision range");
    GrowthReport report;
    report.p = p;
    report.strictly_increasing = true;
    std::size_t prev = 0;
    for (int n = n_lo; n <= n_hi; ++n) {
        RosenlichtSolutionSpace s = rosenlicht_solve(p, n);
        if (n > n_lo && s.dimension <= prev) report.strictly_increasing = false;
        prev = s.dimension;
        report.dimensions.emplace_back(n, s.dimension);
    }
    if (V > 0) {
        report.laurent = laurent_pole_search(p, V, support_top);
        report.laurent_searched = true;
    }
    return report;
}

}  // namespace meyerlab::charp
