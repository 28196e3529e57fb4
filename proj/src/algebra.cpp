#include "twistder/algebra.hpp"

namespace twistder {

QAlgebra split_etale(std::size_t n) {
    std::vector<RatFunc> c(n * n * n, RatFunc());
    std::vector<RatFunc> unit(n, RatFunc(1));
    for (std::size_t i = 0; i < n; ++i) c[(i * n + i) * n + i] = RatFunc(1);
    return QAlgebra(n, std::move(c), std::move(unit));
}

QAlgebra matrix_algebra(std::size_t k) {
    std::size_t n = k * k;
    std::vector<RatFunc> c(n * n * n, RatFunc());
    std::vector<RatFunc> unit(n, RatFunc());
    // E_ab E_cd = [b == c] E_ad
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t d = 0; d < k; ++d) {
                std::size_t i = a * k + b, j = b * k + d, out = a * k + d;
                c[(i * n + j) * n + out] = RatFunc(1);
            }
    for (std::size_t a = 0; a < k; ++a) unit[a * k + a] = RatFunc(1);
    return QAlgebra(n, std::move(c), std::move(unit));
}

QAlgebra dual_numbers_algebra() {
    std::vector<RatFunc> c(8, RatFunc());
    c[(0 * 2 + 0) * 2 + 0] = RatFunc(1); // 1*1 = 1
    c[(0 * 2 + 1) * 2 + 1] = RatFunc(1); // 1*x = x
    c[(1 * 2 + 0) * 2 + 1] = RatFunc(1); // x*1 = x
    // x*x = 0
    return QAlgebra(2, std::move(c), {RatFunc(1), RatFunc()});
}

QAlgebra quadratic_algebra(const RatFunc& a) {
    std::vector<RatFunc> c(8, RatFunc());
    c[(0 * 2 + 0) * 2 + 0] = RatFunc(1);
    c[(0 * 2 + 1) * 2 + 1] = RatFunc(1);
    c[(1 * 2 + 0) * 2 + 1] = RatFunc(1);
    c[(1 * 2 + 1) * 2 + 0] = a; // x^2 = a
    return QAlgebra(2, std::move(c), {RatFunc(1), RatFunc()});
}

QAlgebra quaternion_algebra(const RatFunc& a, const RatFunc& b) {
    // basis 1, i, j, k with k = ij; i^2 = a, j^2 = b, ij = -ji = k,
    // ik = aj, ki = -aj, jk = -bi, kj = bi, k^2 = -ab
    std::size_t n = 4;
    std::vector<RatFunc> c(n * n * n, RatFunc());
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, const RatFunc& v) {
        c[(i * n + j) * n + k] = v;
    };
    RatFunc one(1);
    for (std::size_t i = 0; i < n; ++i) {
        set(0, i, i, one);
        if (i) set(i, 0, i, one);
    }
    set(1, 1, 0, a);
    set(2, 2, 0, b);
    set(3, 3, 0, -(a * b));
    set(1, 2, 3, one);
    set(2, 1, 3, -one);
    set(1, 3, 2, a);
    set(3, 1, 2, -a);
    set(2, 3, 1, -b);
    set(3, 2, 1, b);
    return QAlgebra(n, std::move(c), {one, RatFunc(), RatFunc(), RatFunc()});
}

} // namespace twistder
