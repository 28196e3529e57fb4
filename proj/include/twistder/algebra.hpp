#ifndef TWISTDER_ALGEBRA_HPP
#define TWISTDER_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "twistder/error.hpp"
#include "twistder/extfield.hpp"
#include "twistder/matrix.hpp"
#include "twistder/ratfunc.hpp"

namespace twistder {

// Finite-dimensional unital associative algebra given by structure constants
// over a coefficient field K: e_i e_j = sum_k c[i][j][k] e_k.  Elements are
// coordinate vectors in the fixed basis.
template <class K>
class StructureAlgebra {
public:
    StructureAlgebra(std::size_t n, std::vector<K> constants, std::vector<K> unit)
        : n_(n), c_(std::move(constants)), unit_(std::move(unit)) {
        if (c_.size() != n_ * n_ * n_) throw Error("structure constant count mismatch");
        if (unit_.size() != n_) throw Error("unit vector length mismatch");
    }

    std::size_t dim() const { return n_; }
    const K& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * n_ + j) * n_ + k];
    }
    K& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
    const std::vector<K>& unit() const { return unit_; }

    // coordinates of e_i e_j
    std::vector<K> basis_product(std::size_t i, std::size_t j) const {
        return std::vector<K>(c_.begin() + (i * n_ + j) * n_, c_.begin() + (i * n_ + j + 1) * n_);
    }

    std::vector<K> zero_element() const { return std::vector<K>(n_, sample_zero()); }

    std::vector<K> multiply(const std::vector<K>& u, const std::vector<K>& v) const {
        if (u.size() != n_ || v.size() != n_) throw Error("element length mismatch");
        std::vector<K> w = zero_element();
        for (std::size_t i = 0; i < n_; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (v[j].is_zero()) continue;
                K uv = u[i] * v[j];
                for (std::size_t k = 0; k < n_; ++k)
                    w[k] = w[k] + uv * c(i, j, k);
            }
        }
        return w;
    }

    // associativity on all n^3 basis triples plus the unit law; returns every
    // violated check by name
    std::vector<std::string> validate() const {
        std::vector<std::string> violations;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) {
                    auto left = multiply(basis_product(i, j), basis_vector(k));
                    auto right = multiply(basis_vector(i), basis_product(j, k));
                    if (left != right)
                        violations.push_back("associativity fails on (e" + std::to_string(i) +
                                             ", e" + std::to_string(j) + ", e" + std::to_string(k) +
                                             ")");
                }
        for (std::size_t i = 0; i < n_; ++i) {
            if (multiply(unit_, basis_vector(i)) != basis_vector(i))
                violations.push_back("unit law fails: unit * e" + std::to_string(i));
            if (multiply(basis_vector(i), unit_) != basis_vector(i))
                violations.push_back("unit law fails: e" + std::to_string(i) + " * unit");
        }
        return violations;
    }

    std::vector<K> basis_vector(std::size_t i) const {
        std::vector<K> v = zero_element();
        v[i] = c_[0].one_like();
        return v;
    }

    // same constants seen in a larger coefficient field
    template <class Fn>
    auto scalar_extend(Fn embed) const -> StructureAlgebra<decltype(embed(std::declval<const K&>()))> {
        using K2 = decltype(embed(std::declval<const K&>()));
        std::vector<K2> c2, u2;
        c2.reserve(c_.size());
        u2.reserve(unit_.size());
        for (const auto& x : c_) c2.push_back(embed(x));
        for (const auto& x : unit_) u2.push_back(embed(x));
        return StructureAlgebra<K2>(n_, std::move(c2), std::move(u2));
    }

    K sample_zero() const { return c_[0].zero_like(); }
    K sample_one() const { return c_[0].one_like(); }

private:
    std::size_t n_;
    std::vector<K> c_;   // index (i*n + j)*n + k
    std::vector<K> unit_;
};

using QAlgebra = StructureAlgebra<RatFunc>;   // over Q or F = Q(t)
using EAlgebra = StructureAlgebra<ExtElem>;

inline EAlgebra extend_to(const QAlgebra& a, const ExtFieldPtr& e) {
    return a.scalar_extend([&e](const RatFunc& x) { return e->embed(x); });
}

// --- demo catalog constructors -------------------------------------------

// Q x ... x Q with componentwise product
QAlgebra split_etale(std::size_t n);

// M_k(Q) in the matrix-unit basis E_ab, index a*k + b
QAlgebra matrix_algebra(std::size_t k);

// Q[x]/(x^2), basis (1, x)
QAlgebra dual_numbers_algebra();

// basis (1, i, j, ij) with i^2 = a, j^2 = b, ij = -ji; a, b in F
QAlgebra quaternion_algebra(const RatFunc& a, const RatFunc& b);

// F[x]/(x^2 - a), basis (1, x)
QAlgebra quadratic_algebra(const RatFunc& a);

} // namespace twistder

#endif
