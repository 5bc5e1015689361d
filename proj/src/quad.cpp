#include "meyerlab/quad.hpp"

#include <cmath>

namespace meyerlab::exactnum {

int quad_compare(const QuadElem& x, const Rational& r) {
    const Rational s = x.a() - r;
    const Rational& b = x.b();
    const int ss = sign_of(s);
    const int sb = sign_of(b);
    if (sb == 0) return ss;
    if (ss == 0) return sb;
    if (ss == sb) return ss;
    // opposite signs: |s| vs |b|*sqrt(d), decided by squaring
    const Rational lhs = s * s;
    const Rational rhs = Rational(x.d()) * b * b;
    if (lhs == rhs) return 0;  // impossible for square-free d > 1 and b != 0
    const int cmp = lhs > rhs ? 1 : -1;
    return ss > 0 ? cmp : -cmp;
}

Rational rational_upper_bound(const QuadElem& x) {
    // a + |b| * ceil_sqrt_bound, with ceil_sqrt_bound an integer >= sqrt(d)
    Int c(1);
    while (c * c < Int(x.d())) ++c;
    return x.a() + abs_of(x.b()) * Rational(c);
}

double to_double(const QuadElem& x) {
    return to_double(x.a()) + to_double(x.b()) * std::sqrt(static_cast<double>(x.d()));
}

Int floor_quad(const QuadElem& x) {
    Int k(static_cast<long long>(std::floor(to_double(x))));
    while (quad_compare(x, Rational(k)) < 0) --k;          // k <= x
    while (quad_compare(x, Rational(k + 1)) >= 0) ++k;     // x < k+1
    return k;
}

std::string format_quad(const QuadElem& x) {
    std::string s = format_rational(x.a());
    if (x.b() >= 0) {
        s += "+" + format_rational(x.b());
    } else {
        s += "-" + format_rational(-x.b());
    }
    s += "*sqrt(" + std::to_string(x.d()) + ")";
    return s;
}

QuadElem parse_quad(const std::string& text) {
    // "a+b*sqrt(d)" or "a-b*sqrt(d)"; a, b rational literals, b unsigned after
    // the separating sign
    std::size_t star = text.rfind("*sqrt(");
    if (star == std::string::npos || text.back() != ')')
        throw ParseError("bad quadratic literal: " + text);
    std::string dpart = text.substr(star + 6, text.size() - star - 7);
    long d = 0;
    try {
        d = std::stol(dpart);
    } catch (const std::exception&) {
        throw ParseError("bad quadratic literal: " + text);
    }
    // the sign splitting a from b is the last '+'/'-' before "*sqrt(" that is
    // not part of an exponent-free rational literal's leading sign
    std::size_t split = std::string::npos;
    for (std::size_t i = star; i-- > 1;) {
        if (text[i] == '+' || text[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) throw ParseError("bad quadratic literal: " + text);
    Rational a = parse_rational(text.substr(0, split));
    Rational b = parse_rational(text.substr(split + 1, star - split - 1));
    if (text[split] == '-') b = -b;
    return QuadElem(a, b, d);
}

}  // namespace meyerlab::exactnum
