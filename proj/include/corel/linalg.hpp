#pragma once

// Dense exact-rational matrices with the handful of operations the linear
// relations construction needs: reduced row echelon form, kernels, and
// block assembly. No floating point anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace corel {

struct QMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<mpq_class> a; // row-major

    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, mpq_class(0)) {}
    QMatrix(std::size_t r, std::size_t c, std::vector<mpq_class> e)
        : rows(r), cols(c), a(std::move(e)) {
        if (a.size() != rows * cols) throw std::invalid_argument("QMatrix: bad entry count");
    }

    mpq_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const mpq_class& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const QMatrix& o) const {
        if (rows != o.rows || cols != o.cols) return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (cmp(a[k], o.a[k]) != 0) return false;
        return true;
    }
};

inline QMatrix mul(const QMatrix& x, const QMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mul: inner dimensions do not match");
    QMatrix out(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (cmp(x.at(i, k), 0) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                out.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return out;
}

inline QMatrix transpose(const QMatrix& m) {
    QMatrix out(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

/// [x ; y] stacked vertically.
inline QMatrix vstack(const QMatrix& x, const QMatrix& y) {
    if (x.cols != y.cols) throw std::invalid_argument("vstack: column counts differ");
    QMatrix out(x.rows + y.rows, x.cols);
    std::copy(x.a.begin(), x.a.end(), out.a.begin());
    std::copy(y.a.begin(), y.a.end(), out.a.begin() + static_cast<std::ptrdiff_t>(x.a.size()));
    return out;
}

/// [x | y] side by side.
inline QMatrix hstack(const QMatrix& x, const QMatrix& y) {
    if (x.rows != y.rows) throw std::invalid_argument("hstack: row counts differ");
    QMatrix out(x.rows, x.cols + y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j) out.at(i, j) = x.at(i, j);
        for (std::size_t j = 0; j < y.cols; ++j) out.at(i, x.cols + j) = y.at(i, j);
    }
    return out;
}

inline QMatrix columns(const QMatrix& m, std::size_t first, std::size_t count) {
    if (first + count > m.cols) throw std::invalid_argument("columns: slice out of range");
    QMatrix out(m.rows, count);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < count; ++j) out.at(i, j) = m.at(i, first + j);
    return out;
}

inline QMatrix negate(const QMatrix& m) {
    QMatrix out = m;
    for (auto& v : out.a) v = -v;
    return out;
}

struct Rref {
    QMatrix mat;                     // zero rows dropped; rows = rank
    std::vector<std::size_t> pivots; // strictly increasing pivot columns
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination. The result is the
/// canonical basis of the row space: pivots are 1, pivot columns are
/// otherwise zero, and pivot columns strictly increase.
inline Rref rref(const QMatrix& m) {
    QMatrix w = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < w.cols && row < w.rows; ++col) {
        std::size_t sel = row;
        while (sel < w.rows && cmp(w.at(sel, col), 0) == 0) ++sel;
        if (sel == w.rows) continue;
        for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(row, j), w.at(sel, j));
        mpq_class inv = 1 / w.at(row, col);
        for (std::size_t j = col; j < w.cols; ++j) w.at(row, j) *= inv;
        for (std::size_t i = 0; i < w.rows; ++i) {
            if (i == row || cmp(w.at(i, col), 0) == 0) continue;
            mpq_class factor = w.at(i, col);
            for (std::size_t j = col; j < w.cols; ++j) w.at(i, j) -= factor * w.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    QMatrix out(row, w.cols);
    std::copy(w.a.begin(), w.a.begin() + static_cast<std::ptrdiff_t>(row * w.cols), out.a.begin());
    return Rref{std::move(out), std::move(pivots)};
}

/// Canonical basis of {x : m x = 0}, returned as RREF rows.
inline Rref kernel(const QMatrix& m) {
    Rref r = rref(m);
    std::vector<char> is_pivot(m.cols, 0);
    for (std::size_t p : r.pivots) is_pivot[p] = 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMatrix basis(free_cols.size(), m.cols);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t c = free_cols[k];
        basis.at(k, c) = 1;
        for (std::size_t i = 0; i < r.rank(); ++i) basis.at(k, r.pivots[i]) = -r.mat.at(i, c);
    }
    return rref(basis);
}

/// The canonical surjection k^n -> k^n / rowspace(w), built from the RREF
/// basis of the subspace being quotiented: non-pivot coordinates survive,
/// pivot coordinates are rewritten through their basis row. Its kernel is
/// exactly rowspace(w).
inline QMatrix quotient_map(const Rref& w, std::size_t ambient) {
    std::vector<char> is_pivot(ambient, 0);
    for (std::size_t p : w.pivots) is_pivot[p] = 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < ambient; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMatrix q(free_cols.size(), ambient);
    for (std::size_t k = 0; k < free_cols.size(); ++k) q.at(k, free_cols[k]) = 1;
    for (std::size_t i = 0; i < w.rank(); ++i)
        for (std::size_t k = 0; k < free_cols.size(); ++k)
            q.at(k, w.pivots[i]) = -w.mat.at(i, free_cols[k]);
    return q;
}

inline std::string rational_str(const mpq_class& v) { return v.get_str(); }

} // namespace corel
