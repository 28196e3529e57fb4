#include "twistder/demos.hpp"

#include "twistder/parser.hpp"

namespace twistder {

ExtFieldPtr quadratic_field() {
    auto field = ExtensionField::make(parse_fpoly("s^2 - t", "s"), "s");
    field->set_automorphisms({field->generator(), -field->generator()});
    return field;
}

namespace {

// degree-1 trivial extension E = F, m = x - t, identity Galois group
ExtFieldPtr trivial_field() {
    auto field = ExtensionField::make(parse_fpoly("u - t", "u"), "u");
    field->set_automorphisms({field->generator()});
    return field;
}

EMatrix identity_cocycle_matrix(const ExtFieldPtr& field, std::size_t n) {
    return EMatrix::identity(n, field->zero(), field->one());
}

ExtensionProblem trivial_problem(QAlgebra a) {
    ExtFieldPtr field = trivial_field();
    std::size_t n = a.dim();
    return ExtensionProblem(std::move(a), CocycleData(field, identity_cocycle_matrix(field, n)));
}

} // namespace

std::vector<std::string> demo_names() {
    return {"etale-trivial", "etale-quadratic", "matrix-trivial", "quaternion-t-minus1",
            "dual-numbers"};
}

ExtensionProblem demo_problem(const std::string& name) {
    if (name == "etale-trivial") return trivial_problem(split_etale(2));
    if (name == "matrix-trivial") return trivial_problem(matrix_algebra(2));
    if (name == "dual-numbers") return trivial_problem(dual_numbers_algebra());
    if (name == "etale-quadratic") {
        ExtFieldPtr field = quadratic_field();
        ExtElem s = field->generator();
        EMatrix p_inv(2, 2, {field->one(), field->one(), s, -s});
        return ExtensionProblem(split_etale(2), CocycleData(field, std::move(p_inv)));
    }
    if (name == "quaternion-t-minus1") {
        ExtFieldPtr field = quadratic_field();
        ExtElem s = field->generator();
        ExtElem z = field->zero(), o = field->one();
        // images of 1, i, j, ij as 2x2 matrices over E, rows in the
        // matrix-unit coordinates E11, E12, E21, E22:
        //   1  -> I             i -> diag(s, -s)
        //   j  -> [[0,-1],[1,0]] ij -> [[0,-s],[-s,0]]
        EMatrix p_inv(4, 4,
                      {o, z, z, o,
                       s, z, z, -s,
                       z, -o, o, z,
                       z, -s, -s, z});
        return ExtensionProblem(matrix_algebra(2), CocycleData(field, std::move(p_inv)));
    }
    throw Error("unknown demo '" + name + "'");
}

EMatrix random_conjugation_matrix(std::mt19937_64& rng, const ExtFieldPtr& field) {
    auto small = [&rng]() {
        // uniform in {-2, ..., 2}
        return static_cast<int>(rng() % 5) - 2;
    };
    auto entry = [&]() {
        RatFunc a(QPoly({Rational(small()), Rational(small())}));
        RatFunc b(QPoly({Rational(small()), Rational(small())}));
        return field->embed(a) + field->embed(b) * field->generator();
    };
    for (;;) {
        EMatrix q0(2, 2, {entry(), entry(), entry(), entry()});
        ExtElem det = q0.at(0, 0) * q0.at(1, 1) - q0.at(0, 1) * q0.at(1, 0);
        if (!det.is_zero()) return q0;
    }
}

} // namespace twistder
