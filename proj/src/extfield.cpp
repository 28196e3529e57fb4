#include "twistder/extfield.hpp"

#include <algorithm>

namespace twistder {

namespace {

const ExtFieldPtr& common_field(const ExtElem& a, const ExtElem& b) {
    if (a.field() && b.field() && a.field() != b.field())
        throw Error("elements belong to different extension fields");
    return a.field() ? a.field() : b.field();
}

} // namespace

ExtElem::ExtElem(ExtFieldPtr field, std::vector<RatFunc> coeffs)
    : f_(std::move(field)), c_(std::move(coeffs)) {
    if (!f_) throw Error("extension element needs a field");
    if (c_.size() != f_->degree()) throw Error("extension element has wrong coordinate count");
}

bool ExtElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const RatFunc& x) { return x.is_zero(); });
}

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
    const ExtFieldPtr& f = common_field(a, b);
    if (!f) return ExtElem();
    std::vector<RatFunc> r(f->degree());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.c_.size()) r[i] += a.c_[i];
        if (i < b.c_.size()) r[i] += b.c_[i];
    }
    return ExtElem(f, std::move(r));
}

ExtElem operator-(const ExtElem& a, const ExtElem& b) { return a + (-b); }

ExtElem ExtElem::operator-() const {
    ExtElem r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    const ExtFieldPtr& f = common_field(a, b);
    if (!f) return ExtElem();
    if (!a.f_ || !b.f_) return f->zero();
    return f->from_rep(a.rep() * b.rep());
}

ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inverse(); }

bool operator==(const ExtElem& a, const ExtElem& b) {
    if (!a.f_ || !b.f_) return a.is_zero() == b.is_zero() && (a.is_zero() || a.c_ == b.c_);
    common_field(a, b);
    return a.c_ == b.c_;
}

ExtElem ExtElem::inverse() const {
    if (!f_) throw Error("inverse of zero");
    if (is_zero()) throw Error("inverse of zero");
    auto r = poly_xgcd<RatFunc>(rep(), f_->minpoly());
    if (r.g.degree() != 0)
        throw Error("element is not invertible (non-squarefree modulus?)");
    // g is the monic constant 1, so u * rep = 1 mod m
    return f_->from_rep(r.u);
}

ExtElem ExtElem::pow(unsigned long e) const {
    if (!f_) throw Error("pow on detached element");
    ExtElem r = f_->one(), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

ExtElem ExtElem::derive() const {
    if (!f_) return ExtElem();
    // (sum a_i theta^i)' = sum a_i' theta^i + (sum i a_i theta^{i-1}) theta'
    std::vector<RatFunc> part1(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) part1[i] = c_[i].derive();
    ExtElem res = f_->element(std::move(part1));
    if (c_.size() > 1) {
        std::vector<RatFunc> dcoeffs(c_.size(), RatFunc());
        for (std::size_t i = 1; i < c_.size(); ++i)
            dcoeffs[i - 1] = RatFunc(static_cast<int>(i)) * c_[i];
        res = res + f_->element(std::move(dcoeffs)) * f_->generator_derivative();
    }
    return res;
}

ExtElem ExtElem::zero_like() const {
    if (!f_) return ExtElem();
    return f_->zero();
}

ExtElem ExtElem::one_like() const {
    if (!f_) throw Error("one_like on detached element");
    return f_->one();
}

bool ExtElem::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

RatFunc ExtElem::rational_part() const {
    if (!is_rational()) throw Error("element has a nonzero generator component");
    return c_.empty() ? RatFunc() : c_[0];
}

std::string ExtElem::to_string() const {
    if (!f_ || is_zero()) return "0";
    const std::string& g = f_->generator_name();
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += c_[i].to_string();
            continue;
        }
        std::string power = g + (i > 1 ? "^" + std::to_string(i) : "");
        if (c_[i].is_one())
            out += power;
        else
            out += "(" + c_[i].to_string() + ")*" + power;
    }
    return out;
}

std::shared_ptr<ExtensionField> ExtensionField::make(FPoly minpoly, std::string generator_name) {
    if (minpoly.degree() < 1) throw Error("minimal polynomial must have degree >= 1");
    minpoly = minpoly.monic();
    // squarefree over F: gcd(m, dm/dx) constant
    FPoly g = FPoly::gcd(minpoly, minpoly.derivative());
    if (g.degree() != 0)
        throw Error("minimal polynomial is not squarefree: " + generator_name);
    auto f = std::shared_ptr<ExtensionField>(new ExtensionField());
    f->minpoly_ = std::move(minpoly);
    f->gen_ = std::move(generator_name);
    // identity automorphism: theta -> theta
    f->aut_.push_back(f->generator().coeffs());
    // theta' = -(sum_i m_i' theta^i) / m_x(theta)
    const FPoly& m = f->minpoly_;
    FPoly dm_dt = m.map([](const RatFunc& c) { return c.derive(); });
    ExtElem num = f->from_rep(dm_dt % m);
    ExtElem mx = f->from_rep(m.derivative() % m);
    f->theta_prime_ = ((-num) * mx.inverse()).coeffs();
    return f;
}

ExtElem ExtensionField::element(std::vector<RatFunc> coeffs) const {
    return ExtElem(shared_from_this(), std::move(coeffs));
}

ExtElem ExtensionField::from_rep(const FPoly& p) const {
    FPoly r = p % minpoly_;
    std::vector<RatFunc> c(degree());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.coeff(i);
    return element(std::move(c));
}

ExtElem ExtensionField::embed(const RatFunc& f) const {
    std::vector<RatFunc> c(degree());
    c[0] = f;
    return element(std::move(c));
}

ExtElem ExtensionField::generator() const {
    return from_rep(FPoly::variable());
}

ExtElem ExtensionField::generator_derivative() const {
    return element(theta_prime_);
}

ExtElem ExtensionField::automorphism_image(std::size_t idx) const {
    if (idx >= aut_.size()) throw Error("automorphism index out of range");
    return element(aut_[idx]);
}

ExtElem ExtensionField::apply_automorphism(std::size_t idx, const ExtElem& e) const {
    if (idx >= aut_.size()) throw Error("automorphism index out of range");
    if (!e.field()) return zero();
    if (e.field().get() != this) throw Error("element belongs to a different field");
    // sigma(sum a_i theta^i) = sum a_i sigma(theta)^i, Horner
    ExtElem image = element(aut_[idx]);
    ExtElem acc = zero();
    const auto& c = e.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * image + embed(c[i]);
    return acc;
}

void ExtensionField::set_automorphisms(const std::vector<ExtElem>& images) {
    std::size_t d = degree();
    if (images.size() != d)
        throw Error("Galois condition violated: expected " + std::to_string(d) +
                    " automorphisms, got " + std::to_string(images.size()));
    std::vector<std::vector<RatFunc>> coords;
    for (const auto& r : images) {
        if (!r.field() || r.field().get() != this)
            throw Error("automorphism image belongs to a different field");
        // root check: m(r) = 0 in E
        ExtElem val = minpoly_.eval(r, [this](const RatFunc& c) { return embed(c); });
        if (!val.is_zero())
            throw Error("automorphism image is not a root of the minimal polynomial: " +
                        r.to_string());
        coords.push_back(r.coeffs());
    }
    if (coords[0] != generator().coeffs())
        throw Error("first automorphism must be the identity (generator -> generator)");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (coords[i] == coords[j]) throw Error("duplicate automorphism images");
    aut_ = std::move(coords);
    // closure under composition: sigma_i(sigma_j(theta)) must be in the list
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            ExtElem comp = apply_automorphism(i, automorphism_image(j));
            bool found = false;
            for (std::size_t k = 0; k < d; ++k)
                if (comp.coeffs() == aut_[k]) { found = true; break; }
            if (!found) {
                aut_.assign(1, generator().coeffs());
                throw Error("automorphism list is not closed under composition");
            }
        }
}

} // namespace twistder
