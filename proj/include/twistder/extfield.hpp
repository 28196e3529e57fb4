#ifndef TWISTDER_EXTFIELD_HPP
#define TWISTDER_EXTFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "twistder/error.hpp"
#include "twistder/poly.hpp"
#include "twistder/ratfunc.hpp"

namespace twistder {

using FPoly = Poly<RatFunc>;

class ExtensionField;
using ExtFieldPtr = std::shared_ptr<const ExtensionField>;

// Element of a finite extension E = F[x]/(m(x)), stored as coordinates in
// the power basis 1, theta, ..., theta^{d-1}.
class ExtElem {
public:
    // A default-constructed element is a detached zero: it compares equal to
    // the zero of any field and adopts the other operand's field in binary ops.
    ExtElem() = default;
    ExtElem(ExtFieldPtr field, std::vector<RatFunc> coeffs);

    const std::vector<RatFunc>& coeffs() const { return c_; }
    const ExtFieldPtr& field() const { return f_; }

    bool is_zero() const;
    FPoly rep() const { return FPoly(c_); }

    friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator/(const ExtElem& a, const ExtElem& b);
    ExtElem operator-() const;
    friend bool operator==(const ExtElem& a, const ExtElem& b);
    friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }
    ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
    ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
    ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }

    // extended Euclid against the minimal polynomial
    ExtElem inverse() const;
    ExtElem pow(unsigned long e) const;

    // unique extension of d/dt to E
    ExtElem derive() const;

    ExtElem zero_like() const;
    ExtElem one_like() const;

    // coeffs[0] if all higher coordinates vanish
    bool is_rational() const;
    RatFunc rational_part() const;

    std::string to_string() const;

private:
    friend class ExtensionField;
    ExtFieldPtr f_;
    std::vector<RatFunc> c_;
};

// Finite extension E = F[x]/(m(x)) of F = Q(t) with an explicit, verified
// automorphism list (Galois: exactly d = deg m automorphisms, closed under
// composition, identity first).  m must be squarefree over F so that the
// derivation of F extends uniquely.
class ExtensionField : public std::enable_shared_from_this<ExtensionField> {
public:
    // validates monicity (normalizing if needed), degree >= 1, squarefreeness;
    // the returned field initially carries only the identity automorphism
    static std::shared_ptr<ExtensionField> make(FPoly minpoly, std::string generator_name);

    // images of the generator under each automorphism, identity first;
    // validates roots, distinctness, closure and count d
    void set_automorphisms(const std::vector<ExtElem>& images);

    std::size_t degree() const { return static_cast<std::size_t>(minpoly_.degree()); }
    const FPoly& minpoly() const { return minpoly_; }
    const std::string& generator_name() const { return gen_; }

    ExtElem element(std::vector<RatFunc> coeffs) const;
    ExtElem from_rep(const FPoly& p) const; // reduce mod m
    ExtElem embed(const RatFunc& f) const;
    ExtElem zero() const { return embed(RatFunc()); }
    ExtElem one() const { return embed(RatFunc(1)); }
    ExtElem generator() const;

    // theta' = -(sum_i m_i' theta^i) / m_x(theta)
    ExtElem generator_derivative() const;

    std::size_t automorphism_count() const { return aut_.size(); }
    ExtElem automorphism_image(std::size_t idx) const;
    ExtElem apply_automorphism(std::size_t idx, const ExtElem& e) const;

private:
    ExtensionField() = default;
    FPoly minpoly_;
    std::string gen_;
    std::vector<std::vector<RatFunc>> aut_;        // generator images, coords
    std::vector<RatFunc> theta_prime_;
};

} // namespace twistder

#endif
