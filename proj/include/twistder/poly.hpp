#ifndef TWISTDER_POLY_HPP
#define TWISTDER_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "twistder/error.hpp"

namespace twistder {

// Dense univariate polynomial over a field K, coefficients lowest degree
// first, no trailing zeros. The zero polynomial is the empty list.
// K must be constructible from int and support +, -, *, /, ==.
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(K k) { return Poly(std::vector<K>{std::move(k)}); }
    static Poly variable() { return Poly(std::vector<K>{K(0), K(1)}); }

    bool is_zero() const { return c_.empty(); }
    // degree of zero is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const std::vector<K>& coeffs() const { return c_; }

    K lead() const {
        if (c_.empty()) throw Error("lead coefficient of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == K(1); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<K> r(c_.size(), K(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const K& s, const Poly& a) {
        std::vector<K> r(a.c_.size(), K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division, divisor nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw Error("polynomial division by zero");
        std::vector<K> rem = a.c_;
        std::vector<K> quot;
        int db = b.degree();
        if (a.degree() >= db) quot.assign(a.degree() - db + 1, K(0));
        K blead = b.lead();
        for (int i = a.degree(); i >= db; --i) {
            if (rem[i] == K(0)) continue;
            K f = rem[i] / blead;
            quot[i - db] = f;
            for (int j = 0; j <= db; ++j)
                rem[i - db + j] = rem[i - db + j] - f * b.c_[j];
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        K inv = K(1) / lead();
        return inv * *this;
    }

    // monic gcd; gcd(0, 0) = 0
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // formal derivative with respect to the polynomial variable
    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1, K(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = K(static_cast<int>(i)) * c_[i];
        return Poly(std::move(r));
    }

    // coefficient-wise map (e.g. d/dt applied to each coefficient)
    template <class Fn>
    Poly map(Fn fn) const {
        std::vector<K> r(c_.size(), K(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = fn(c_[i]);
        return Poly(std::move(r));
    }

    Poly pow(unsigned long e) const {
        Poly r = constant(K(1));
        Poly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Horner evaluation in any ring V; embed lifts coefficients into V.
    template <class V, class Embed>
    V eval(const V& x, Embed embed) const {
        V acc = embed(K(0));
        for (int i = degree(); i >= 0; --i) acc = acc * x + embed(c_[i]);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
    std::vector<K> c_;
};

// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <class K>
struct XgcdResult {
    Poly<K> g, u, v;
};

template <class K>
XgcdResult<K> poly_xgcd(Poly<K> a, Poly<K> b) {
    Poly<K> u0 = Poly<K>::constant(K(1)), v0;
    Poly<K> u1, v1 = Poly<K>::constant(K(1));
    while (!b.is_zero()) {
        auto [q, r] = Poly<K>::divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        Poly<K> u2 = u0 - q * u1, v2 = v0 - q * v1;
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(u2);
        v1 = std::move(v2);
    }
    if (!a.is_zero()) {
        K inv = K(1) / a.lead();
        return {inv * a, inv * u0, inv * v0};
    }
    return {a, u0, v0};
}

} // namespace twistder

#endif
