#include "doctest.h"

#include "twistder/algebra.hpp"
#include "twistder/parser.hpp"

#include "test_util.hpp"

using namespace twistder;
using namespace twistder::testutil;

TEST_CASE("multiply examples") {
    QAlgebra e2 = split_etale(2);
    std::vector<RatFunc> x{RatFunc(1), RatFunc()};
    std::vector<RatFunc> y{RatFunc(), RatFunc(1)};
    CHECK(e2.multiply(x, y) == e2.zero_element());
    CHECK(e2.multiply(e2.unit(), y) == y);

    QAlgebra m2 = matrix_algebra(2);
    // E_12 E_21 = E_11 (index a*2 + b)
    CHECK(m2.multiply(m2.basis_vector(0 * 2 + 1), m2.basis_vector(1 * 2 + 0)) ==
          m2.basis_vector(0 * 2 + 0));
    // E_12 E_12 = 0
    CHECK(m2.multiply(m2.basis_vector(0 * 2 + 1), m2.basis_vector(0 * 2 + 1)) ==
          m2.zero_element());

    QAlgebra dual = dual_numbers_algebra();
    std::vector<RatFunc> eps = dual.basis_vector(1);
    CHECK(dual.multiply(eps, eps) == dual.zero_element());

    QAlgebra quat = quaternion_algebra(parse_ratfunc("t"), RatFunc(-1));
    // i^2 = t, j^2 = -1, ij = -ji
    std::vector<RatFunc> tvec = quat.zero_element();
    tvec[0] = parse_ratfunc("t");
    CHECK(quat.multiply(quat.basis_vector(1), quat.basis_vector(1)) == tvec);
    std::vector<RatFunc> ij = quat.multiply(quat.basis_vector(1), quat.basis_vector(2));
    std::vector<RatFunc> ji = quat.multiply(quat.basis_vector(2), quat.basis_vector(1));
    for (std::size_t k = 0; k < 4; ++k) CHECK(ij[k] == -ji[k]);
    CHECK(ij == quat.basis_vector(3));
}

TEST_CASE("validate passes on the catalog") {
    CHECK(split_etale(2).validate().empty());
    CHECK(split_etale(3).validate().empty());
    CHECK(matrix_algebra(2).validate().empty());
    CHECK(matrix_algebra(3).validate().empty());
    CHECK(dual_numbers_algebra().validate().empty());
    CHECK(quadratic_algebra(parse_ratfunc("t")).validate().empty());
    CHECK(quaternion_algebra(parse_ratfunc("t"), RatFunc(-1)).validate().empty());
}

TEST_CASE("validate names violated triples") {
    QAlgebra m2 = matrix_algebra(2);
    m2.c(0, 0, 0) = m2.c(0, 0, 0) + RatFunc(1);
    auto violations = m2.validate();
    REQUIRE_FALSE(violations.empty());
    CHECK(violations.front().find("associativity fails on (e0") != std::string::npos);
}

TEST_CASE("single-entry corruptions are rejected") {
    QAlgebra m2 = matrix_algebra(2);
    std::mt19937_64 rng(13);
    for (int it = 0; it < 20; ++it) {
        QAlgebra bad = m2;
        std::size_t i = rng() % 4, j = rng() % 4, k = rng() % 4;
        bad.c(i, j, k) = bad.c(i, j, k) + RatFunc(1 + static_cast<int>(rng() % 3));
        CHECK_FALSE(bad.validate().empty());
    }
}

TEST_CASE("scalar extension preserves validity") {
    auto field = qfield();
    CHECK(extend_to(matrix_algebra(2), field).validate().empty());
    CHECK(extend_to(quaternion_algebra(parse_ratfunc("t"), RatFunc(-1)), field)
              .validate()
              .empty());
    // constants carry over unchanged
    QAlgebra a = dual_numbers_algebra();
    EAlgebra a_e = extend_to(a, field);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                CHECK(a_e.c(i, j, k) == field->embed(a.c(i, j, k)));
}

TEST_CASE("multiplication is bilinear") {
    QAlgebra m2 = matrix_algebra(2);
    std::mt19937_64 rng(19);
    auto random_elem = [&] {
        std::vector<RatFunc> v;
        for (std::size_t i = 0; i < 4; ++i) v.push_back(random_ratfunc(rng, 1));
        return v;
    };
    for (int it = 0; it < 20; ++it) {
        auto u = random_elem();
        auto v = random_elem();
        auto w = random_elem();
        RatFunc lam = random_ratfunc(rng, 1);
        std::vector<RatFunc> vw(4), lam_u(4);
        for (std::size_t i = 0; i < 4; ++i) {
            vw[i] = v[i] + w[i];
            lam_u[i] = lam * u[i];
        }
        auto lhs = m2.multiply(u, vw);
        auto uv = m2.multiply(u, v);
        auto uw = m2.multiply(u, w);
        for (std::size_t i = 0; i < 4; ++i) CHECK(lhs[i] == uv[i] + uw[i]);
        auto scaled = m2.multiply(lam_u, v);
        for (std::size_t i = 0; i < 4; ++i) CHECK(scaled[i] == lam * uv[i]);
    }
}
