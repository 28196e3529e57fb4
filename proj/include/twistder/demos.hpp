#ifndef TWISTDER_DEMOS_HPP
#define TWISTDER_DEMOS_HPP

#include <random>
#include <string>
#include <vector>

#include "twistder/extend.hpp"

namespace twistder {

// Built-in instances used by the `demo` command and the acceptance tests:
//   etale-trivial        P_inv = I on Q x Q
//   etale-quadratic      Vandermonde rows over s^2 = t, form F[x]/(x^2 - t)
//   matrix-trivial       M_2(Q), P_inv = I
//   quaternion-t-minus1  M_2(Q) twisted to i^2 = t, j^2 = -1
//   dual-numbers         Q[x]/(x^2), trivial cocycle
std::vector<std::string> demo_names();
ExtensionProblem demo_problem(const std::string& name);

// E = F(s), s^2 = t with the order-2 Galois group
ExtFieldPtr quadratic_field();

// seeded conjugation-cocycle generator on M_2 over quadratic_field():
// Q0 entries a0 + a1 t + (b0 + b1 t) s, coefficients uniform in {-2..2},
// resampled while singular
EMatrix random_conjugation_matrix(std::mt19937_64& rng, const ExtFieldPtr& field);

} // namespace twistder

#endif
