#pragma once

#include <optional>
#include <vector>

#include "meyerlab/quad.hpp"
#include "meyerlab/rational.hpp"

namespace meyerlab::linalg {

using exactnum::QuadElem;
using exactnum::Rational;

inline bool lin_is_zero(const Rational& x) { return x == 0; }
inline bool lin_is_zero(const QuadElem& x) { return x.is_zero(); }
inline Rational lin_zero_like(const Rational&) { return Rational(0); }
inline Rational lin_one_like(const Rational&) { return Rational(1); }
inline QuadElem lin_zero_like(const QuadElem& x) { return QuadElem(Rational(0), Rational(0), x.d()); }
inline QuadElem lin_one_like(const QuadElem& x) { return QuadElem(Rational(1), Rational(0), x.d()); }
inline bool lin_less(const Rational& x, const Rational& y) { return x < y; }
inline bool lin_less(const QuadElem& x, const QuadElem& y) { return exactnum::quad_less(x, y); }
inline int lin_sign(const Rational& x) { return exactnum::sign_of(x); }
inline int lin_sign(const QuadElem& x) { return exactnum::sign_of(x); }

template <class F>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<F> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, const F& fill) : rows(r), cols(c), a(r * c, fill) {}
    F& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const F& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Forward elimination, columns processed left to right, pivot row = first row
// with a nonzero entry in the column. Rows are updated by cross-multiplication
// with the Bareiss division by the previous pivot, so divisions happen only at
// pivots already known to divide exactly (always, over a field). Returns the
// pivot columns in order; `m` ends in row-echelon form.
template <class F>
std::vector<std::size_t> echelon(Mat<F>& m) {
    std::vector<std::size_t> pivots;
    if (m.rows == 0 || m.cols == 0) return pivots;
    F prev_pivot = lin_one_like(m.a[0]);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t sel = rank;
        while (sel < m.rows && lin_is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != rank)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(sel, j));
        const F pivot = m.at(rank, col);
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            const F factor = m.at(i, col);
            if (lin_is_zero(factor)) continue;
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = (m.at(i, j) * pivot - m.at(rank, j) * factor) / prev_pivot;
        }
        prev_pivot = pivot;
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

template <class F>
std::size_t rank_of(Mat<F> m) {
    return echelon(m).size();
}

// Basis of the right kernel {x : m x = 0}; one vector per free column, each
// normalized so its first nonzero coordinate is one. Deterministic.
template <class F>
std::vector<std::vector<F>> kernel_basis(Mat<F> m) {
    std::vector<std::vector<F>> basis;
    if (m.cols == 0) return basis;
    const F zero = lin_zero_like(m.a.empty() ? F{} : m.a[0]);
    const F one = lin_one_like(m.a.empty() ? F{} : m.a[0]);
    if (m.rows == 0) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            std::vector<F> v(m.cols, zero);
            v[j] = one;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    std::vector<std::size_t> pivots = echelon(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(m.cols, zero);
        v[f] = one;
        // back-substitute pivot coordinates bottom-up
        for (std::size_t r = pivots.size(); r-- > 0;) {
            const std::size_t pc = pivots[r];
            if (pc > f) continue;
            F acc = zero;
            for (std::size_t j = pc + 1; j < m.cols; ++j)
                if (!lin_is_zero(v[j]) && !lin_is_zero(m.at(r, j))) acc = acc + m.at(r, j) * v[j];
            v[pc] = (zero - acc) / m.at(r, pc);
        }
        // normalize leading coordinate to one
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (!lin_is_zero(v[j])) {
                const F lead = v[j];
                for (std::size_t k = j; k < m.cols; ++k) v[k] = v[k] / lead;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Any solution of A x = b when the columns of A are linearly independent;
// nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> solve_independent(Mat<F> A, const std::vector<F>& b) {
    const F zero = lin_zero_like(b.empty() ? (A.a.empty() ? F{} : A.a[0]) : b[0]);
    Mat<F> aug(A.rows, A.cols + 1, zero);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    std::vector<std::size_t> pivots = echelon(aug);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;  // pivot in b
    std::vector<F> x(A.cols, zero);
    for (std::size_t r = pivots.size(); r-- > 0;) {
        const std::size_t pc = pivots[r];
        F acc = aug.at(r, A.cols);
        for (std::size_t j = pc + 1; j < A.cols; ++j)
            if (!lin_is_zero(x[j])) acc = acc - aug.at(r, j) * x[j];
        x[pc] = acc / aug.at(r, pc);
    }
    // columns independent means every column is a pivot iff rank == cols;
    // otherwise the residual must be checked by the caller if it matters
    for (std::size_t i = 0; i < A.rows; ++i) {
        F acc = zero;
        for (std::size_t j = 0; j < A.cols; ++j)
            if (!lin_is_zero(x[j])) acc = acc + A.at(i, j) * x[j];
        if (!(lin_is_zero(acc - b[i]))) return std::nullopt;
    }
    return x;
}

}  // namespace meyerlab::linalg
