#ifndef TWISTDER_RATFUNC_HPP
#define TWISTDER_RATFUNC_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "twistder/error.hpp"
#include "twistder/poly.hpp"

namespace twistder {

using Rational = mpq_class;
using QPoly = Poly<Rational>;

// gcd over Q via a primitive PRS on integer polynomials; the generic Euclid
// in Poly blows up coefficients badly for Q
QPoly qpoly_gcd(const QPoly& a, const QPoly& b);

template <>
inline QPoly QPoly::gcd(QPoly a, QPoly b) {
    return qpoly_gcd(a, b);
}

// Rational function in t over the rationals, i.e. an element of F = Q(t).
// Canonical form: denominator monic, gcd(num, den) = 1.  The derivation is
// d/dt with t' = 1, so the constants are exactly Q.
class RatFunc {
public:
    RatFunc() : num_(), den_(QPoly::constant(1)) {}
    RatFunc(int k) : num_(QPoly::constant(Rational(k))), den_(QPoly::constant(1)) {}
    explicit RatFunc(Rational q) : num_(QPoly::constant(std::move(q))), den_(QPoly::constant(1)) {}
    explicit RatFunc(QPoly num) : num_(std::move(num)), den_(QPoly::constant(1)) {}
    RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    static RatFunc t() { return RatFunc(QPoly::variable()); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == QPoly::constant(1) && den_ == QPoly::constant(1); }
    // true iff the value lies in the constant field Q
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    Rational constant_value() const {
        if (!is_constant()) throw Error("rational function is not a constant");
        if (num_.is_zero()) return Rational(0);
        return num_.coeff(0) / den_.coeff(0);
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return add_impl(a, b, false);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return add_impl(a, b, true);
    }
    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        // cross-cancellation: canonical inputs leave nothing to cancel after
        // dividing out gcd(a.num, b.den) and gcd(b.num, a.den)
        QPoly g1 = QPoly::gcd(a.num_, b.den_);
        QPoly g2 = QPoly::gcd(b.num_, a.den_);
        QPoly n = (g1.degree() > 0 ? a.num_ / g1 : a.num_) * (g2.degree() > 0 ? b.num_ / g2 : b.num_);
        QPoly d = (g2.degree() > 0 ? a.den_ / g2 : a.den_) * (g1.degree() > 0 ? b.den_ / g1 : b.den_);
        return RatFunc(NoCanon{}, std::move(n), std::move(d));
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        return a * b.inverse();
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const {
        if (is_zero()) throw Error("inverse of zero in Q(t)");
        return RatFunc(NoCanon{}, den_, num_);
    }

    RatFunc pow(unsigned long e) const {
        RatFunc r(1), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // quotient rule for d/dt
    RatFunc derive() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RatFunc zero_like() const { return RatFunc(); }
    RatFunc one_like() const { return RatFunc(1); }

    std::string to_string() const;

private:
    struct NoCanon {};

    // With a.den = g A, b.den = g B and g = gcd of the denominators, any
    // common factor of the sum's numerator and denominator divides g, so a
    // full-size gcd is never needed.
    static RatFunc add_impl(const RatFunc& a, const RatFunc& b, bool subtract) {
        QPoly g = QPoly::gcd(a.den_, b.den_);
        QPoly big_a = g.degree() > 0 ? a.den_ / g : a.den_;
        QPoly big_b = g.degree() > 0 ? b.den_ / g : b.den_;
        QPoly bn = subtract ? -b.num_ : b.num_;
        QPoly num = a.num_ * big_b + bn * big_a;
        QPoly den = a.den_ * big_b;
        if (g.degree() > 0 && !num.is_zero()) {
            QPoly h = QPoly::gcd(num, g);
            if (h.degree() > 0) {
                num = num / h;
                den = den / h;
            }
        }
        return RatFunc(NoCanon{}, std::move(num), std::move(den));
    }
    // coprime num/den, only monic normalization needed
    RatFunc(NoCanon, QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error("zero denominator in Q(t)");
        if (num_.is_zero()) {
            den_ = QPoly::constant(1);
            return;
        }
        monic_den();
    }

    void monic_den() {
        Rational lead = den_.lead();
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    void canonicalize() {
        if (den_.is_zero()) throw Error("zero denominator in Q(t)");
        if (num_.is_zero()) {
            den_ = QPoly::constant(1);
            return;
        }
        if (den_.degree() > 0) {
            QPoly g = QPoly::gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        monic_den();
    }

    QPoly num_, den_;
};

// Textual form of a Q-coefficient polynomial in the given variable, highest
// degree first, conforming to the expression grammar ("t^2 - 2*t - 1").
std::string qpoly_to_string(const QPoly& p, const std::string& var = "t");

} // namespace twistder

#endif
