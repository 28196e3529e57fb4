#include "twistder/ratfunc.hpp"

namespace twistder {

namespace {

// integer polynomial, lowest degree first, trimmed, primitive with positive lead
std::vector<mpz_class> to_primitive_int(const QPoly& p) {
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs()) lcm_den = lcm(lcm_den, c.get_den());
    std::vector<mpz_class> z;
    z.reserve(p.coeffs().size());
    mpz_class content = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class v = c.get_num() * (lcm_den / c.get_den());
        content = gcd(content, v);
        z.push_back(std::move(v));
    }
    if (content == 0) return {};
    if (z.back() < 0) content = -content;
    for (auto& v : z) v /= content;
    return z;
}

void ztrim(std::vector<mpz_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(std::vector<mpz_class>& p) {
    mpz_class content = 0;
    for (const auto& v : p) content = gcd(content, v);
    if (content == 0) return;
    if (p.back() < 0) content = -content;
    for (auto& v : p) v /= content;
}

// pseudo-remainder of a by b (b nonzero), in place on a copy
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    std::size_t db = b.size() - 1;
    const mpz_class& lead = b.back();
    while (a.size() >= b.size()) {
        mpz_class f = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& v : a) v *= lead;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
        ztrim(a);
        if (a.empty()) break;
    }
    return a;
}

} // namespace

QPoly qpoly_gcd(const QPoly& a, const QPoly& b) {
    std::vector<mpz_class> x = to_primitive_int(a);
    std::vector<mpz_class> y = to_primitive_int(b);
    if (x.empty()) std::swap(x, y);
    while (!y.empty()) {
        std::vector<mpz_class> r = pseudo_rem(std::move(x), y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return QPoly();
    std::vector<Rational> q;
    q.reserve(x.size());
    const mpz_class& lead = x.back();
    for (const auto& v : x) q.emplace_back(v, lead);
    for (auto& c : q) c.canonicalize();
    return QPoly(std::move(q));
}

namespace {

std::string rational_to_string(const Rational& q) {
    Rational r = q;
    r.canonicalize();
    return r.get_str();
}

// one monomial |c|*var^i, sign handled by the caller
std::string term_to_string(const Rational& c, int i, const std::string& var) {
    Rational a = abs(c);
    std::string s;
    if (i == 0) return rational_to_string(a);
    if (a != 1) s = rational_to_string(a) + "*";
    s += var;
    if (i > 1) s += "^" + std::to_string(i);
    return s;
}

} // namespace

std::string qpoly_to_string(const QPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += term_to_string(c, i, var);
    }
    return out;
}

std::string RatFunc::to_string() const {
    if (den_ == QPoly::constant(1)) return qpoly_to_string(num_);
    return "(" + qpoly_to_string(num_) + ")/(" + qpoly_to_string(den_) + ")";
}

} // namespace twistder
