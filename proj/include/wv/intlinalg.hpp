#ifndef WV_INTLINALG_HPP
#define WV_INTLINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wv {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMat {
public:
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c)
            a_[i * cols_ + c].swap(a_[j * cols_ + c]);
    }

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> a_;
};

namespace detail {

/// Divide a row by the gcd of its entries to keep growth down.
inline void strip_content(IntMat& m, std::size_t row, std::size_t from_col) {
    BigInt g = 0;
    for (std::size_t c = from_col; c < m.cols(); ++c) {
        if (m(row, c) != 0) g = boost::multiprecision::gcd(g, m(row, c));
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (std::size_t c = from_col; c < m.cols(); ++c)
        if (m(row, c) != 0) m(row, c) /= g;
}

} // namespace detail

/// Rank over the integers by fraction-free row elimination.
/// Pivots are chosen by minimal absolute value; rows with a zero multiplier
/// are left untouched, so sparse inputs stay sparse.
inline std::size_t row_echelon_rank(IntMat m) {
    std::size_t rank = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (m(i, col) == 0) continue;
            if (pivot == rows ||
                boost::multiprecision::abs(m(i, col)) < boost::multiprecision::abs(m(pivot, col)))
                pivot = i;
        }
        if (pivot == rows) continue;
        m.swap_rows(rank, pivot);
        const BigInt p = m(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m(i, col) == 0) continue;
            const BigInt q = m(i, col);
            const BigInt g = boost::multiprecision::gcd(p, q);
            const BigInt a = p / g, b = q / g;
            for (std::size_t c = col; c < cols; ++c)
                m(i, c) = a * m(i, c) - b * m(rank, c);
            detail::strip_content(m, i, col);
        }
        ++rank;
    }
    return rank;
}

/// Exact determinant of a square integer matrix (Bareiss).
inline BigInt determinant(IntMat m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0) ++r;
            if (r == n) return 0;
            m.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Solve A x = b exactly over the rationals. Requires the columns of A to be
/// linearly independent; returns nullopt when the system is inconsistent.
inline std::optional<std::vector<BigRat>> solve_unique(const IntMat& a,
                                                       const std::vector<BigInt>& b) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (b.size() != rows) throw std::invalid_argument("solve_unique: rhs length mismatch");

    std::vector<std::vector<BigRat>> m(rows, std::vector<BigRat>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = BigRat(a(i, j));
        m[i][cols] = BigRat(b[i]);
    }

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pr = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][col] != 0) { pr = i; break; }
        if (pr == rows) throw std::invalid_argument("solve_unique: columns not independent");
        std::swap(m[r], m[pr]);
        const BigRat p = m[r][col];
        for (std::size_t c = col; c <= cols; ++c) m[r][c] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col] == 0) continue;
            const BigRat f = m[i][col];
            for (std::size_t c = col; c <= cols; ++c) m[i][c] -= f * m[r][c];
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt; // inconsistent

    std::vector<BigRat> x(cols);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = m[k][cols];
    return x;
}

} // namespace wv

#endif
