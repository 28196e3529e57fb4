#ifndef TWISTDER_MATRIX_HPP
#define TWISTDER_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "twistder/error.hpp"

namespace twistder {

// Dense matrix over an exact field.  K supplies +, -, *, ==, unary -,
// inverse(), is_zero(), derive(), zero_like(), one_like(), to_string().
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const K& fill)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<K> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_) throw Error("matrix entry count mismatch");
    }

    static Matrix identity(std::size_t n, const K& zero, const K& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<K>& entries() const { return e_; }

    K& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_, a.sample_zero());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend Matrix operator*(const K& s, const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.e_) x = s * x;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    // entrywise application of the derivation
    Matrix derive() const {
        Matrix r = *this;
        for (auto& x : r.e_) x = x.derive();
        return r;
    }

    template <class Fn>
    auto map(Fn fn) const -> Matrix<decltype(fn(std::declval<const K&>()))> {
        using K2 = decltype(fn(std::declval<const K&>()));
        std::vector<K2> out;
        out.reserve(e_.size());
        for (const auto& x : e_) out.push_back(fn(x));
        return Matrix<K2>(rows_, cols_, std::move(out));
    }

    std::vector<K> row(std::size_t i) const {
        return std::vector<K>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
    }

    K sample_zero() const {
        if (e_.empty()) throw Error("sample from empty matrix");
        return e_[0].zero_like();
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            out += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += ", ";
                out += at(i, j).to_string();
            }
            out += "]\n";
        }
        return out;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
    }
    std::size_t rows_, cols_;
    std::vector<K> e_;
};

// In-place Gauss-Jordan on a list of equal-length rows; only the first
// `ncols` columns are eligible as pivots (trailing columns ride along, which
// is how augmented systems are reduced).  Returns the pivot columns,
// leftmost first.
template <class K>
std::vector<std::size_t> rref_rows(std::vector<std::vector<K>>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[r]);
        K inv = rows[r][col].inverse();
        for (auto& x : rows[r]) x = inv * x;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            K f = rows[i][col];
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

template <class K>
struct RrefResult {
    Matrix<K> reduced;
    std::vector<std::size_t> pivots;
};

template <class K>
RrefResult<K> rref(const Matrix<K>& m) {
    std::vector<std::vector<K>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    auto pivots = rref_rows(rows, m.cols());
    std::vector<K> flat;
    flat.reserve(m.rows() * m.cols());
    for (auto& r : rows)
        for (auto& x : r) flat.push_back(std::move(x));
    return {Matrix<K>(m.rows(), m.cols(), std::move(flat)), std::move(pivots)};
}

template <class K>
struct LinearSolution {
    bool consistent = false;
    std::vector<K> particular;               // free variables zeroed
    std::vector<std::vector<K>> nullspace;   // canonical order: free columns ascending
};

// Solves A x = b exactly; A given as rows of length ncols, b as the
// right-hand sides.  Degenerate shapes (no equations, no unknowns) are legal.
template <class K>
LinearSolution<K> solve_linear(const std::vector<std::vector<K>>& a,
                               const std::vector<K>& b,
                               std::size_t ncols,
                               const K& zero,
                               const K& one) {
    if (a.size() != b.size()) throw Error("linear system shape mismatch");
    std::vector<std::vector<K>> aug;
    aug.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != ncols) throw Error("linear system shape mismatch");
        std::vector<K> row = a[i];
        row.push_back(b[i]);
        aug.push_back(std::move(row));
    }
    auto pivots = rref_rows(aug, ncols);
    LinearSolution<K> sol;
    for (std::size_t i = pivots.size(); i < aug.size(); ++i)
        if (!aug[i][ncols].is_zero()) return sol; // inconsistent
    sol.consistent = true;
    sol.particular.assign(ncols, zero);
    for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug[i][ncols];
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(ncols, zero);
        v[f] = one;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug[i][f];
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

template <class K>
Matrix<K> matrix_inverse(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
    std::size_t n = m.rows();
    K zero = m.sample_zero();
    K one = m.entries()[0].one_like();
    std::vector<std::vector<K>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<K> r = m.row(i);
        for (std::size_t j = 0; j < n; ++j) r.push_back(i == j ? one : zero);
        rows.push_back(std::move(r));
    }
    auto pivots = rref_rows(rows, n);
    if (pivots.size() != n) throw Error("singular matrix");
    std::vector<K> flat;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat.push_back(rows[i][n + j]);
    return Matrix<K>(n, n, std::move(flat));
}

} // namespace twistder

#endif
