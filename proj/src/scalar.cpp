#include "meyerlab/scalar.hpp"

namespace meyerlab::exactnum {

namespace {
template <class T>
T arith(const T& a, const T& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw Error("unreachable");
}
}  // namespace

Scalar scalar_arith(const Scalar& x, const Scalar& y, ArithOp op) {
    if (x.index() != y.index()) throw DomainMismatchError("scalar domains differ");
    if (const auto* a = std::get_if<Rational>(&x)) {
        const auto& b = std::get<Rational>(y);
        if (op == ArithOp::Div && b == 0) throw DivisionByZeroError("rational division by zero");
        return arith(*a, b, op);
    }
    if (const auto* a = std::get_if<QuadElem>(&x)) return arith(*a, std::get<QuadElem>(y), op);
    return arith(std::get<FpSeries>(x), std::get<FpSeries>(y), op);
}

Scalar scalar_neg(const Scalar& x) {
    return std::visit([](const auto& v) -> Scalar { return -v; }, x);
}

bool scalar_is_zero(const Scalar& x) {
    if (const auto* r = std::get_if<Rational>(&x)) return *r == 0;
    if (const auto* q = std::get_if<QuadElem>(&x)) return q->is_zero();
    return std::get<FpSeries>(x).is_zero();
}

bool scalar_eq(const Scalar& x, const Scalar& y) {
    if (x.index() != y.index()) return false;
    if (const auto* r = std::get_if<Rational>(&x)) return *r == std::get<Rational>(y);
    if (const auto* q = std::get_if<QuadElem>(&x)) return *q == std::get<QuadElem>(y);
    return std::get<FpSeries>(x) == std::get<FpSeries>(y);
}

bool scalar_less(const Scalar& x, const Scalar& y) {
    if (x.index() != y.index()) return x.index() < y.index();
    if (const auto* r = std::get_if<Rational>(&x)) return *r < std::get<Rational>(y);
    if (const auto* q = std::get_if<QuadElem>(&x)) return quad_less(*q, std::get<QuadElem>(y));
    return std::get<FpSeries>(x) < std::get<FpSeries>(y);
}

int scalar_sign(const Scalar& x) {
    if (const auto* r = std::get_if<Rational>(&x)) return sign_of(*r);
    if (const auto* q = std::get_if<QuadElem>(&x)) return sign_of(*q);
    throw DomainMismatchError("series have no real sign");
}

Scalar scalar_abs(const Scalar& x) { return scalar_sign(x) < 0 ? scalar_neg(x) : x; }

int scalar_compare(const Scalar& x, const Rational& r) {
    if (const auto* v = std::get_if<Rational>(&x)) return *v == r ? 0 : (*v < r ? -1 : 1);
    if (const auto* q = std::get_if<QuadElem>(&x)) return quad_compare(*q, r);
    throw DomainMismatchError("series are not comparable to rationals");
}

double scalar_to_double(const Scalar& x) {
    if (const auto* r = std::get_if<Rational>(&x)) return to_double(*r);
    if (const auto* q = std::get_if<QuadElem>(&x)) return to_double(*q);
    throw DomainMismatchError("series have no real value");
}

std::string format_scalar(const Scalar& x) {
    if (const auto* r = std::get_if<Rational>(&x)) return format_rational(*r);
    if (const auto* q = std::get_if<QuadElem>(&x)) return format_quad(*q);
    return format_series(std::get<FpSeries>(x));
}

Scalar parse_scalar(const std::string& text) {
    if (text.find("p=") == 0) return parse_series(text);
    if (text.find("sqrt(") != std::string::npos) return parse_quad(text);
    return parse_rational(text);
}

}  // namespace meyerlab::exactnum
