#pragma once

#include <string>

#include "meyerlab/rational.hpp"

namespace meyerlab::exactnum {

// Element a + b*sqrt(d) of a real quadratic field Q(sqrt(d)), d a fixed
// positive square-free integer. Equality is componentwise; all comparisons
// against the real embedding are exact (no floating point anywhere).
class QuadElem {
public:
    QuadElem() : d_(2) {}
    QuadElem(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (d_ <= 0) throw DomainMismatchError("quadratic field parameter must be positive");
    }
    static QuadElem from_rational(const Rational& a, long d) { return QuadElem(a, Rational(0), d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadElem conjugate() const { return QuadElem(a_, -b_, d_); }
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadElem operator-() const { return QuadElem(-a_, -b_, d_); }

    QuadElem operator+(const QuadElem& o) const {
        check_field(o);
        return QuadElem(a_ + o.a_, b_ + o.b_, d_);
    }
    QuadElem operator-(const QuadElem& o) const {
        check_field(o);
        return QuadElem(a_ - o.a_, b_ - o.b_, d_);
    }
    QuadElem operator*(const QuadElem& o) const {
        check_field(o);
        return QuadElem(a_ * o.a_ + Rational(d_) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d_);
    }
    QuadElem operator/(const QuadElem& o) const {
        check_field(o);
        if (o.is_zero()) throw DivisionByZeroError("division by zero in Q(sqrt(d))");
        // multiply by the conjugate; the norm of a nonzero element is nonzero
        // since d is not a rational square.
        Rational n = o.norm();
        QuadElem t = *this * o.conjugate();
        return QuadElem(t.a_ / n, t.b_ / n, d_);
    }

    bool operator==(const QuadElem& o) const { return d_ == o.d_ && a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadElem& o) const { return !(*this == o); }

private:
    void check_field(const QuadElem& o) const {
        if (d_ != o.d_) throw DomainMismatchError("mixed quadratic fields");
    }

    Rational a_, b_;
    long d_;
};

// Exact sign of a + b*sqrt(d) - r, reduced to rational comparisons of
// (a - r)^2 against d*b^2 using the signs of (a - r) and b.
int quad_compare(const QuadElem& x, const Rational& r);

// Exact sign of the real embedding of x.
inline int sign_of(const QuadElem& x) { return quad_compare(x, Rational(0)); }

inline QuadElem abs_of(const QuadElem& x) { return sign_of(x) < 0 ? -x : x; }

// Total order by the real embedding.
inline bool quad_less(const QuadElem& x, const QuadElem& y) { return sign_of(x - y) < 0; }

// Rational q with q >= x, within 1 of the true value; used only to pad
// enumeration bounds and exemption margins, never for verdicts.
Rational rational_upper_bound(const QuadElem& x);

// Exact floor of the real embedding: double estimate, corrected by exact
// comparisons.
Int floor_quad(const QuadElem& x);

double to_double(const QuadElem& x);

// Text form "a+b*sqrt(d)" (or "a-b*sqrt(d)" for negative b).
std::string format_quad(const QuadElem& x);
QuadElem parse_quad(const std::string& text);

}  // namespace meyerlab::exactnum
