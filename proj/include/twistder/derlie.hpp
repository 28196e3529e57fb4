#ifndef TWISTDER_DERLIE_HPP
#define TWISTDER_DERLIE_HPP

#include <vector>

#include "twistder/affine.hpp"
#include "twistder/algebra.hpp"
#include "twistder/matrix.hpp"

namespace twistder {

// Matrix-of-map convention throughout: a linear map d acts on the basis
// column V = (e_1, ..., e_n)^T by d(V) = M V, i.e. d(e_i) = sum_j M_ij e_j.
// Composition then reverses the matrix product: [d1 o d2] = M2 M1.

namespace detail {

// Leibniz system rows for unknown N (flattened row-major, n^2 unknowns):
// for each (i, j, k):
//   sum_l N_il c[l][j][k] + sum_l N_jl c[i][l][k] - sum_l c[i][j][l] N_lk
// Equation order (i, j, k); the right-hand side is supplied by the caller.
template <class K>
std::vector<std::vector<K>> leibniz_rows(const StructureAlgebra<K>& a) {
    std::size_t n = a.dim();
    K zero = a.sample_zero();
    std::vector<std::vector<K>> rows;
    rows.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<K> row(n * n, zero);
                for (std::size_t l = 0; l < n; ++l) {
                    row[i * n + l] = row[i * n + l] + a.c(l, j, k);
                    row[j * n + l] = row[j * n + l] + a.c(i, l, k);
                    row[l * n + k] = row[l * n + k] - a.c(i, j, l);
                }
                rows.push_back(std::move(row));
            }
    return rows;
}

template <class K>
AffineMatrixSpace<K> leibniz_solve(const StructureAlgebra<K>& a, const std::vector<K>& rhs) {
    std::size_t n = a.dim();
    K zero = a.sample_zero();
    K one = a.sample_one();
    auto rows = leibniz_rows(a);
    auto sol = solve_linear(rows, rhs, n * n, zero, one);
    if (!sol.consistent) return AffineMatrixSpace<K>::empty_space(n);
    std::vector<Matrix<K>> basis;
    for (auto& v : sol.nullspace) basis.push_back(Matrix<K>(n, n, std::move(v)));
    return AffineMatrixSpace<K>::make(n, Matrix<K>(n, n, std::move(sol.particular)),
                                      std::move(basis));
}

} // namespace detail

// All K-linear derivations of A: the Lie algebra of the automorphism scheme,
// as point 0 plus a canonical basis.
template <class K>
AffineMatrixSpace<K> lie_algebra(const StructureAlgebra<K>& a) {
    std::vector<K> rhs(a.dim() * a.dim() * a.dim(), a.sample_zero());
    return detail::leibniz_solve(a, rhs);
}

// All matrices N such that d_N extends the derivation of the coefficient
// field: the right-hand side picks up the derivative of the structure
// constants.  Empty when no extension exists.
template <class K>
AffineMatrixSpace<K> direct_extension_space(const StructureAlgebra<K>& b) {
    std::size_t n = b.dim();
    std::vector<K> rhs;
    rhs.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) rhs.push_back(b.c(i, j, k).derive());
    return detail::leibniz_solve(b, rhs);
}

// Independent route for derivation-ness: a |-> a + d_M(a) eps must preserve
// products in A[eps], eps^2 = 0.  Dual numbers (a + b eps)(c + d eps)
// = ac + (ad + bc) eps.
template <class K>
bool dual_number_check(const StructureAlgebra<K>& a, const Matrix<K>& m) {
    std::size_t n = a.dim();
    if (m.rows() != n || m.cols() != n) throw Error("derivation matrix has wrong shape");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // phi(e_i) phi(e_j) with phi(e_i) = e_i + (row_i M) eps
            auto ac = a.basis_product(i, j);
            auto ad = a.multiply(a.basis_vector(i), m.row(j));
            auto bc = a.multiply(m.row(i), a.basis_vector(j));
            // phi(e_i e_j): eps-part is sum_k c[i][j][k] row_k(M)
            std::vector<K> eps_expected = a.zero_element();
            for (std::size_t k = 0; k < n; ++k) {
                if (a.c(i, j, k).is_zero()) continue;
                for (std::size_t l = 0; l < n; ++l)
                    eps_expected[l] = eps_expected[l] + a.c(i, j, k) * m.at(k, l);
            }
            for (std::size_t l = 0; l < n; ++l)
                if (ad[l] + bc[l] != eps_expected[l]) return false;
            (void)ac; // a-parts agree identically
        }
    return true;
}

// Q invertible, product-preserving on all basis pairs, unit-preserving.
template <class K>
bool is_algebra_automorphism(const StructureAlgebra<K>& a, const Matrix<K>& q) {
    std::size_t n = a.dim();
    if (q.rows() != n || q.cols() != n) throw Error("automorphism matrix has wrong shape");
    try {
        (void)matrix_inverse(q);
    } catch (const Error&) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto lhs = a.multiply(q.row(i), q.row(j));
            // phi(e_i e_j) = sum_k c[i][j][k] row_k(Q)
            std::vector<K> rhs = a.zero_element();
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    rhs[l] = rhs[l] + a.c(i, j, k) * q.at(k, l);
            if (lhs != rhs) return false;
        }
    // phi(unit) = unit
    std::vector<K> u = a.zero_element();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) u[l] = u[l] + a.unit()[k] * q.at(k, l);
    return u == a.unit();
}

// Exact Leibniz check against the derived structure constants; this is the
// membership test behind verify steps.
template <class K>
bool verify_derivation(const StructureAlgebra<K>& b, const Matrix<K>& nmat) {
    std::size_t n = b.dim();
    if (nmat.rows() != n || nmat.cols() != n) return false;
    auto rows = detail::leibniz_rows(b);
    std::size_t idx = 0;
    const auto& x = nmat.entries();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                K acc = b.sample_zero();
                const auto& row = rows[idx++];
                for (std::size_t u = 0; u < x.size(); ++u) acc = acc + row[u] * x[u];
                if (acc != b.c(i, j, k).derive()) return false;
            }
    return true;
}

} // namespace twistder

#endif
