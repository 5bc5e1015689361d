#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meyerlab/errors.hpp"

namespace meyerlab::exactnum {

// Truncated formal Laurent series over F_p: sum of c_i t^i for v <= i < N,
// known modulo t^N. Coefficients are residues in {0,...,p-1}; the leading
// coefficient (index v) is nonzero unless the series is zero, in which case
// v == N and there are no stored coefficients. Valuations are bounded below
// by -kValuationFloor.
class FpSeries {
public:
    static constexpr int kValuationFloor = 8;

    FpSeries() : p_(2), prec_(1), val_(1) {}

    // Builds from raw coefficients starting at index `val`; normalizes.
    FpSeries(unsigned p, int prec, int val, std::vector<unsigned> coeffs);

    static FpSeries zero(unsigned p, int prec) { return FpSeries(p, prec, prec, {}); }
    static FpSeries one(unsigned p, int prec) { return FpSeries(p, prec, 0, {1}); }
    // c * t^k
    static FpSeries monomial(unsigned p, int prec, int k, unsigned c);

    unsigned p() const { return p_; }
    int precision() const { return prec_; }
    int valuation() const { return val_; }  // == precision() for the zero series
    bool is_zero() const { return coeffs_.empty(); }
    bool is_unit() const { return !is_zero() && val_ == 0; }

    // Coefficient of t^i (0 outside the stored range; i >= precision is not
    // knowable and throws).
    unsigned coeff(int i) const;

    FpSeries truncated(int new_prec) const;

    FpSeries operator-() const;
    FpSeries operator+(const FpSeries& o) const;
    FpSeries operator-(const FpSeries& o) const;
    FpSeries operator*(const FpSeries& o) const;
    FpSeries operator/(const FpSeries& o) const;

    // x^p. In characteristic p this moves coefficient i to p*i and keeps its
    // value (a^p = a in F_p); output truncated at the input precision.
    FpSeries frobenius() const;

    // Structural equality (same p, precision, valuation, coefficients).
    bool operator==(const FpSeries& o) const {
        return p_ == o.p_ && prec_ == o.prec_ && val_ == o.val_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const FpSeries& o) const { return !(*this == o); }
    // Lexicographic structural order, for deterministic sets.
    bool operator<(const FpSeries& o) const;

private:
    void check_domain(const FpSeries& o) const {
        if (p_ != o.p_) throw DomainMismatchError("mixed series characteristics");
    }
    void normalize();

    unsigned p_;
    int prec_;
    int val_;
    std::vector<unsigned> coeffs_;  // indices val_ .. prec_-1
};

// "p=<prime>;N=<prec>;v=<val>;c=<c_v,...,c_{N-1}>"
std::string format_series(const FpSeries& x);
FpSeries parse_series(const std::string& text);

}  // namespace meyerlab::exactnum
