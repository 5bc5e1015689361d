#pragma once

#include "meyerlab/fpseries.hpp"
#include "meyerlab/linalg.hpp"

namespace meyerlab::charp {

using exactnum::FpSeries;

// residue field element for the coefficient linear algebra
struct Fp {
    unsigned v = 0;
    unsigned p = 2;

    Fp operator+(const Fp& o) const { return {(v + o.v) % p, p}; }
    Fp operator-(const Fp& o) const { return {(v + p - o.v % p) % p, p}; }
    Fp operator*(const Fp& o) const { return {(v * o.v) % p, p}; }
    Fp operator/(const Fp& o) const;
    bool operator==(const Fp& o) const { return v == o.v && p == o.p; }
};

inline bool lin_is_zero(const Fp& x) { return x.v == 0; }
inline Fp lin_zero_like(const Fp& x) { return {0, x.p}; }
inline Fp lin_one_like(const Fp& x) { return {1, x.p}; }

// The group equation y^p = t x^p - x over F_p[[t]] mod t^N, as an F_p-linear
// constraint system on the coefficients (a_0..a_{N-1}, b_0..b_{N-1}):
//
//   for every j < N:   (b_{j/p} if p | j else 0)
//                    = (a_{(j-1)/p} if j >= 1 and p | j-1 else 0) - a_j
//
// since y^p is supported on indices divisible by p and t x^p on indices
// congruent to 1 mod p. Additivity of the Frobenius makes the solution set an
// F_p-subspace.
struct RosenlichtSolutionSpace {
    unsigned p = 2;
    int precision = 1;
    std::vector<std::pair<FpSeries, FpSeries>> basis;  // independent solutions (x, y)
    std::size_t dimension = 0;
};

RosenlichtSolutionSpace rosenlicht_solve(unsigned p, int precision);

// x, y from the coefficient vector layout above
std::pair<FpSeries, FpSeries> pair_from_coefficients(unsigned p, int precision,
                                                     const std::vector<Fp>& coeffs);

// residual y^p - (t x^p - x), zero exactly when (x, y) solves mod t^N
FpSeries rosenlicht_residual(const FpSeries& x, const FpSeries& y);

// Every pair (x, y) mod t^N satisfying the equation, by exhaustive
// enumeration over all p^(2N) coefficient vectors. The defining oracle for
// the solver; small N only.
std::vector<std::pair<FpSeries, FpSeries>> rosenlicht_enumerate(unsigned p, int precision);

// All p^dim members of the solution space (the basis span).
std::vector<std::pair<FpSeries, FpSeries>> span_members(const RosenlichtSolutionSpace& s);

struct LaurentSearchReport {
    unsigned p = 2;
    int valuation_floor = 0;   // -V
    int support_top = 0;       // coefficients range over [-V, support_top)
    int check_precision = 0;   // residual tested mod t^this
    unsigned long long candidates = 0;
    std::vector<std::pair<FpSeries, FpSeries>> solutions;  // expected empty
};

// Bounded certification that the equation has no solutions with a pole:
// every Laurent pair supported on [-V, top) with some negative-index
// coefficient nonzero leaves a nonzero residual mod t^top. Truncating a true
// solution changes the residual only at order >= top, so an empty result
// rules out genuine solutions of valuation in [-V, -1].
LaurentSearchReport laurent_pole_search(unsigned p, int V, int support_top);

struct GrowthReport {
    unsigned p = 2;
    std::vector<std::pair<int, std::size_t>> dimensions;  // (N, dim)
    bool strictly_increasing = false;
    LaurentSearchReport laurent;  // skipped when V = 0
    bool laurent_searched = false;
};

GrowthReport rosenlicht_growth(unsigned p, int n_lo, int n_hi, int V, int support_top = 4);

}  // namespace meyerlab::charp
