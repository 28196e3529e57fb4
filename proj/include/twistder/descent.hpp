#ifndef TWISTDER_DESCENT_HPP
#define TWISTDER_DESCENT_HPP

#include <string>
#include <vector>

#include "twistder/algebra.hpp"
#include "twistder/derlie.hpp"
#include "twistder/extfield.hpp"
#include "twistder/matrix.hpp"

namespace twistder {

using EMatrix = Matrix<ExtElem>;
using FMatrix = Matrix<RatFunc>;

inline EMatrix apply_automorphism(const ExtFieldPtr& f, std::size_t sigma, const EMatrix& m) {
    return m.map([&](const ExtElem& e) { return f->apply_automorphism(sigma, e); });
}

// A Galois cocycle presented by the matrix P_inv whose rows express the
// twisted basis w = P^{-1} V in the basis V of A.  The cocycle matrices
// F_sigma = sigma(P) P^{-1} are the unique ones fixing every entry of w
// under the twisted action (row-acting convention: an element with
// coordinate row a maps to sigma(a) F_sigma).
class CocycleData {
public:
    CocycleData(ExtFieldPtr field, EMatrix p_inv)
        : field_(std::move(field)), p_inv_(std::move(p_inv)), p_(matrix_inverse(p_inv_)) {}

    const ExtFieldPtr& field() const { return field_; }
    const EMatrix& p_inv() const { return p_inv_; }
    const EMatrix& p() const { return p_; }
    std::size_t n() const { return p_inv_.rows(); }

    const EMatrix& cocycle_matrix(std::size_t sigma) const {
        return cocycle_matrices()[sigma];
    }

    const std::vector<EMatrix>& cocycle_matrices() const {
        if (fs_.empty())
            for (std::size_t s = 0; s < field_->automorphism_count(); ++s)
                fs_.push_back(apply_automorphism(field_, s, p_) * p_inv_);
        return fs_;
    }

private:
    ExtFieldPtr field_;
    EMatrix p_inv_;
    EMatrix p_;
    mutable std::vector<EMatrix> fs_;
};

struct CheckReport {
    struct Item {
        std::string name;
        bool pass;
        std::string detail; // empty when passing
    };
    std::vector<Item> items;
    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        items.push_back({std::move(name), pass, std::move(detail)});
    }
};

// Three checks: every F_sigma is an algebra automorphism of A tensor E, the
// cocycle identity F_{sigma tau} = sigma(F_tau) F_sigma, and F_id = id.
CheckReport validate_cocycle(const EAlgebra& a_e, const CocycleData& cd);

// (sigma, element) -> F_sigma applied to the coordinate-wise sigma image.
std::vector<ExtElem> twisted_action(std::size_t sigma,
                                    const std::vector<ExtElem>& elem,
                                    const CocycleData& cd);

struct TwistedForm {
    QAlgebra b;        // the form over F; constants are rational
    EMatrix basis_map; // P_inv: rows of B's basis in A's basis
};

// Descends A along the cocycle: multiplies the twisted basis elements in
// A tensor E, re-expresses the products in the twisted basis and checks that
// every resulting constant lies in F.
TwistedForm build_twisted_form(const QAlgebra& a, const CocycleData& cd);

// P_inv for A = M_k(Q) from Q0 in GL_k(E): w_i = Q0^{-1} u_i Q0 on the
// matrix-unit basis.  Conjugation cocycles are always valid because the
// resulting F_sigma are inner automorphisms.
CocycleData conjugation_cocycle(const ExtFieldPtr& field, const EMatrix& q0);

} // namespace twistder

#endif
