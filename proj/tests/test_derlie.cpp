#include "doctest.h"

#include "twistder/demos.hpp"
#include "twistder/derlie.hpp"
#include "twistder/parser.hpp"

#include "test_util.hpp"

using namespace twistder;
using namespace twistder::testutil;

namespace {

FMatrix diag2(const RatFunc& a, const RatFunc& b) {
    return FMatrix(2, 2, {a, RatFunc(), RatFunc(), b});
}

} // namespace

TEST_CASE("lie algebra dimensions") {
    CHECK(lie_algebra(split_etale(2)).dimension() == 0);
    CHECK(lie_algebra(matrix_algebra(2)).dimension() == 3);
    CHECK(lie_algebra(dual_numbers_algebra()).dimension() == 1);
    // all derivations kill the unit, so the point is zero
    CHECK(lie_algebra(matrix_algebra(2)).point().is_zero());
}

TEST_CASE("dual_number_check") {
    QAlgebra m2 = matrix_algebra(2);
    FMatrix zero(4, 4, RatFunc());
    CHECK(dual_number_check(m2, zero));
    // the identity map is not a derivation of a unital algebra
    CHECK_FALSE(dual_number_check(m2, FMatrix::identity(4, RatFunc(), RatFunc(1))));
    auto g = lie_algebra(m2);
    for (const auto& b : g.basis()) CHECK(dual_number_check(m2, b));
}

TEST_CASE("dual_number_check agrees with the linear solver") {
    QAlgebra m2 = matrix_algebra(2);
    auto g = lie_algebra(m2);
    std::mt19937_64 rng(37);
    int agree = 0;
    for (int it = 0; it < 50; ++it) {
        FMatrix m = random_fmatrix(rng, 4, 1);
        CHECK(dual_number_check(m2, m) == g.contains(m));
        ++agree;
    }
    CHECK(agree == 50);
}

TEST_CASE("is_algebra_automorphism") {
    QAlgebra e2 = split_etale(2);
    RatFunc z, o(1);
    CHECK(is_algebra_automorphism(e2, FMatrix::identity(2, z, o)));
    // swap the two factors
    CHECK(is_algebra_automorphism(e2, FMatrix(2, 2, {z, o, o, z})));
    // scaling one factor breaks idempotence
    CHECK_FALSE(is_algebra_automorphism(e2, diag2(o, -o)));
    // singular maps are never automorphisms
    CHECK_FALSE(is_algebra_automorphism(e2, FMatrix(2, 2, z)));

    // conjugation pushed to the structure-constant basis is always one
    auto field = qfield();
    EAlgebra m2e = extend_to(matrix_algebra(2), field);
    std::mt19937_64 rng(43);
    for (int it = 0; it < 10; ++it) {
        EMatrix q0 = random_conjugation_matrix(rng, field);
        EMatrix q0_inv = matrix_inverse(q0);
        EMatrix q(4, 4, field->zero());
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b)
                for (std::size_t r = 0; r < 2; ++r)
                    for (std::size_t s = 0; s < 2; ++s)
                        q.at(a * 2 + b, r * 2 + s) = q0_inv.at(r, a) * q0.at(b, s);
        CHECK(is_algebra_automorphism(m2e, q));
    }
}

TEST_CASE("direct_extension_space examples") {
    // F[x]/(x^2 - t): the unique extension sends x to x/(2t)
    auto s1 = direct_extension_space(quadratic_algebra(parse_ratfunc("t")));
    CHECK(s1.dimension() == 0);
    CHECK(s1.point() == diag2(RatFunc(), parse_ratfunc("1/(2*t)")));

    // constant structure constants: point 0, homogeneous part = the Lie algebra
    auto s2 = direct_extension_space(matrix_algebra(2));
    CHECK(s2.point().is_zero());
    CHECK(s2.dimension() == 3);

    // i^2 = t, j^2 = -1: contains diag(0, 1/(2t), 0, 1/(2t))
    QAlgebra quat = quaternion_algebra(parse_ratfunc("t"), RatFunc(-1));
    auto s3 = direct_extension_space(quat);
    CHECK(s3.dimension() == 3);
    FMatrix cand(4, 4, RatFunc());
    cand.at(1, 1) = parse_ratfunc("1/(2*t)");
    cand.at(3, 3) = parse_ratfunc("1/(2*t)");
    CHECK(s3.contains(cand));
    CHECK(verify_derivation(quat, cand));
}

TEST_CASE("homogeneous part of the extension space is the lie algebra") {
    for (QAlgebra a : {quadratic_algebra(parse_ratfunc("t")),
                       quaternion_algebra(parse_ratfunc("t"), RatFunc(-1)),
                       matrix_algebra(2), dual_numbers_algebra()}) {
        auto ext = direct_extension_space(a);
        auto g = lie_algebra(a);
        REQUIRE(ext.dimension() == g.dimension());
        CHECK(ext.basis() == g.basis());
    }
}

TEST_CASE("lie algebra closes under the bracket") {
    auto g = lie_algebra(matrix_algebra(2));
    // composition reverses the matrix product, so [d1, d2] = M2 M1 - M1 M2
    for (const auto& m1 : g.basis())
        for (const auto& m2 : g.basis()) {
            FMatrix bracket = m2 * m1 - m1 * m2;
            CHECK(g.contains(bracket));
        }
}

TEST_CASE("verify_derivation matches the element-level Leibniz rule") {
    QAlgebra quat = quaternion_algebra(parse_ratfunc("t"), RatFunc(-1));
    auto ext = direct_extension_space(quat);
    REQUIRE_FALSE(ext.is_empty());
    std::vector<FMatrix> reps{ext.point()};
    for (const auto& b : ext.basis()) reps.push_back(ext.point() + b);
    std::mt19937_64 rng(53);
    for (const FMatrix& nmat : reps) {
        REQUIRE(verify_derivation(quat, nmat));
        // delta(u v) = delta(u) v + u delta(v) with delta(u) = u' + u N
        for (int it = 0; it < 20; ++it) {
            std::vector<RatFunc> u, v;
            for (std::size_t i = 0; i < 4; ++i) {
                u.push_back(random_ratfunc(rng, 1));
                v.push_back(random_ratfunc(rng, 1));
            }
            auto delta = [&](const std::vector<RatFunc>& x) {
                std::vector<RatFunc> out;
                for (std::size_t j = 0; j < 4; ++j) {
                    RatFunc acc = x[j].derive();
                    for (std::size_t i = 0; i < 4; ++i) acc += x[i] * nmat.at(i, j);
                    out.push_back(acc);
                }
                return out;
            };
            auto lhs = delta(quat.multiply(u, v));
            auto r1 = quat.multiply(delta(u), v);
            auto r2 = quat.multiply(u, delta(v));
            for (std::size_t j = 0; j < 4; ++j) CHECK(lhs[j] == r1[j] + r2[j]);
        }
    }

    // perturbing the point off the space breaks the check
    FMatrix bad = ext.point();
    bad.at(0, 0) += RatFunc(1);
    CHECK_FALSE(verify_derivation(quat, bad));
}
