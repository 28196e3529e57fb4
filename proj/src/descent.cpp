#include "twistder/descent.hpp"

namespace twistder {

CheckReport validate_cocycle(const EAlgebra& a_e, const CocycleData& cd) {
    CheckReport report;
    const ExtFieldPtr& field = cd.field();
    std::size_t d = field->automorphism_count();
    const auto& fs = cd.cocycle_matrices();

    for (std::size_t s = 0; s < d; ++s) {
        bool ok = is_algebra_automorphism(a_e, fs[s]);
        report.add("F_sigma[" + std::to_string(s) + "] is an algebra automorphism", ok,
                   ok ? "" : "twisted action does not preserve products");
    }

    // index of the composition sigma_i o sigma_j in the automorphism list
    auto compose_index = [&](std::size_t i, std::size_t j) {
        ExtElem img = field->apply_automorphism(i, field->automorphism_image(j));
        for (std::size_t k = 0; k < d; ++k)
            if (img == field->automorphism_image(k)) return k;
        throw Error("automorphism list not closed under composition");
    };

    bool identity_ok = true;
    {
        EMatrix id = EMatrix::identity(cd.n(), field->zero(), field->one());
        identity_ok = fs[0] == id;
    }
    report.add("F_identity = identity", identity_ok);

    bool cocycle_ok = true;
    std::string detail;
    for (std::size_t i = 0; i < d && cocycle_ok; ++i)
        for (std::size_t j = 0; j < d && cocycle_ok; ++j) {
            std::size_t ij = compose_index(i, j);
            EMatrix rhs = apply_automorphism(field, i, fs[j]) * fs[i];
            if (fs[ij] != rhs) {
                cocycle_ok = false;
                detail = "fails for pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
            }
        }
    report.add("cocycle identity F_{sigma tau} = sigma(F_tau) F_sigma", cocycle_ok, detail);
    return report;
}

std::vector<ExtElem> twisted_action(std::size_t sigma,
                                    const std::vector<ExtElem>& elem,
                                    const CocycleData& cd) {
    const ExtFieldPtr& field = cd.field();
    if (sigma >= field->automorphism_count()) throw Error("automorphism index out of range");
    std::size_t n = cd.n();
    if (elem.size() != n) throw Error("element length mismatch");
    EMatrix f = cd.cocycle_matrix(sigma);
    // row vector sigma(a) times F_sigma
    std::vector<ExtElem> out(n, field->zero());
    for (std::size_t i = 0; i < n; ++i) {
        ExtElem s = field->apply_automorphism(sigma, elem[i]);
        if (s.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) out[j] = out[j] + s * f.at(i, j);
    }
    return out;
}

TwistedForm build_twisted_form(const QAlgebra& a, const CocycleData& cd) {
    const ExtFieldPtr& field = cd.field();
    std::size_t n = a.dim();
    if (cd.n() != n) throw Error("cocycle size does not match the algebra dimension");
    EAlgebra a_e = extend_to(a, field);
    const EMatrix& p_inv = cd.p_inv();
    const EMatrix& p = cd.p();

    // invariance of the twisted basis under every automorphism
    for (std::size_t s = 0; s < field->automorphism_count(); ++s)
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<ExtElem> w = p_inv.row(i);
            if (twisted_action(s, w, cd) != w)
                throw Error("twisted basis entry " + std::to_string(i) +
                            " is not invariant under automorphism " + std::to_string(s));
        }

    // c_B[i][j][.] = (coords of w_i w_j in V) * P, entry-wise rational
    std::vector<RatFunc> c_b;
    c_b.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<ExtElem> prod = a_e.multiply(p_inv.row(i), p_inv.row(j));
            for (std::size_t r = 0; r < n; ++r) {
                ExtElem acc = field->zero();
                for (std::size_t m = 0; m < n; ++m) acc = acc + prod[m] * p.at(m, r);
                if (!acc.is_rational())
                    throw Error("non-rational structure constant in the twisted form at (" +
                                std::to_string(i) + ", " + std::to_string(j) + ", " +
                                std::to_string(r) + "): " + acc.to_string());
                c_b.push_back(acc.rational_part());
            }
        }

    // unit of B: coordinates of A's unit in the w basis
    std::vector<RatFunc> unit_b;
    for (std::size_t r = 0; r < n; ++r) {
        ExtElem acc = field->zero();
        for (std::size_t m = 0; m < n; ++m)
            acc = acc + field->embed(a.unit()[m]) * p.at(m, r);
        if (!acc.is_rational()) throw Error("non-rational unit coordinate in the twisted form");
        unit_b.push_back(acc.rational_part());
    }

    QAlgebra b(n, std::move(c_b), std::move(unit_b));
    auto violations = b.validate();
    if (!violations.empty())
        throw Error("twisted form fails validation: " + violations.front());
    return TwistedForm{std::move(b), p_inv};
}

CocycleData conjugation_cocycle(const ExtFieldPtr& field, const EMatrix& q0) {
    std::size_t k = q0.rows();
    if (q0.cols() != k) throw Error("conjugation matrix must be square");
    EMatrix q0_inv = matrix_inverse(q0);
    std::size_t n = k * k;
    EMatrix p_inv(n, n, field->zero());
    // row a*k+b of P_inv: coordinates of Q0^{-1} E_ab Q0 in the matrix units
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t s = 0; s < k; ++s)
                    p_inv.at(a * k + b, r * k + s) = q0_inv.at(r, a) * q0.at(b, s);
    return CocycleData(field, std::move(p_inv));
}

} // namespace twistder
