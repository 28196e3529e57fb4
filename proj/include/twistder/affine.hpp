#ifndef TWISTDER_AFFINE_HPP
#define TWISTDER_AFFINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "twistder/matrix.hpp"

namespace twistder {

// Coset N0 + span{H_1, ..., H_r} of n x n matrices, or the empty set.
// Canonical form: basis matrices flattened row-major are the nonzero rows of
// an RREF, and the point's pivot coordinates are zeroed against them, so two
// equal cosets have identical representations.
template <class K>
class AffineMatrixSpace {
public:
    static AffineMatrixSpace empty_space(std::size_t n) {
        AffineMatrixSpace s;
        s.n_ = n;
        return s;
    }

    static AffineMatrixSpace make(std::size_t n, Matrix<K> point, std::vector<Matrix<K>> basis) {
        AffineMatrixSpace s;
        s.n_ = n;
        std::size_t dim = n * n;
        std::vector<std::vector<K>> rows;
        for (const auto& h : basis) {
            if (h.rows() != n || h.cols() != n) throw Error("basis matrix has wrong shape");
            rows.push_back(h.entries());
        }
        rref_rows(rows, dim);
        while (!rows.empty()) {
            bool zero_row = true;
            for (const auto& x : rows.back())
                if (!x.is_zero()) { zero_row = false; break; }
            if (!zero_row) break;
            rows.pop_back();
        }
        if (point.rows() != n || point.cols() != n) throw Error("point matrix has wrong shape");
        std::vector<K> p = point.entries();
        reduce_against(p, rows);
        s.point_ = Matrix<K>(n, n, std::move(p));
        for (auto& r : rows) s.basis_.push_back(Matrix<K>(n, n, std::move(r)));
        return s;
    }

    std::size_t n() const { return n_; }
    bool is_empty() const { return !point_.has_value(); }
    std::size_t dimension() const { return basis_.size(); }
    const Matrix<K>& point() const {
        if (is_empty()) throw Error("empty affine space has no point");
        return *point_;
    }
    const std::vector<Matrix<K>>& basis() const { return basis_; }

    // membership in the coset
    bool contains(const Matrix<K>& m) const {
        if (is_empty()) return false;
        std::vector<K> v = (m - *point_).entries();
        reduce_against(v, basis_rows());
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool affine_equal(const AffineMatrixSpace& a, const AffineMatrixSpace& b) {
        if (a.n_ != b.n_) throw Error("affine spaces of different matrix size");
        if (a.is_empty() || b.is_empty()) return a.is_empty() == b.is_empty();
        if (a.basis_.size() != b.basis_.size()) return false;
        for (std::size_t i = 0; i < a.basis_.size(); ++i)
            if (a.basis_[i] != b.basis_[i]) return false;
        return a.contains(*b.point_);
    }

    std::string to_string() const {
        if (is_empty()) return "empty\n";
        std::string out = "point:\n" + indent(point_->to_string());
        for (std::size_t i = 0; i < basis_.size(); ++i)
            out += "basis[" + std::to_string(i) + "]:\n" + indent(basis_[i].to_string());
        out += "dimension: " + std::to_string(basis_.size()) + "\n";
        return out;
    }

private:
    AffineMatrixSpace() : n_(0) {}

    std::vector<std::vector<K>> basis_rows() const {
        std::vector<std::vector<K>> rows;
        for (const auto& h : basis_) rows.push_back(h.entries());
        return rows;
    }

    // subtract multiples of the RREF rows so that v's pivot coordinates vanish
    static void reduce_against(std::vector<K>& v, const std::vector<std::vector<K>>& rref) {
        for (const auto& row : rref) {
            std::size_t p = 0;
            while (p < row.size() && row[p].is_zero()) ++p;
            if (p == row.size() || v[p].is_zero()) continue;
            K f = v[p];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * row[j];
        }
    }

    static std::string indent(const std::string& s) {
        std::string out;
        std::size_t start = 0;
        while (start < s.size()) {
            std::size_t end = s.find('\n', start);
            if (end == std::string::npos) end = s.size();
            out += "  " + s.substr(start, end - start) + "\n";
            start = end + 1;
        }
        return out;
    }

    std::size_t n_;
    std::optional<Matrix<K>> point_;
    std::vector<Matrix<K>> basis_;
};

} // namespace twistder

#endif
