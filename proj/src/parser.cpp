#include "twistder/parser.hpp"

namespace twistder {

RatFunc parse_ratfunc(const std::string& text) {
    std::map<std::string, RatFunc> syms{{"t", RatFunc::t()}};
    ExprParser<RatFunc> p(text, std::move(syms),
                          [](const mpz_class& z) { return RatFunc(Rational(z)); });
    return p.parse();
}

ExtElem parse_ext_elem(const std::string& text, const ExtFieldPtr& field) {
    std::map<std::string, ExtElem> syms{{"t", field->embed(RatFunc::t())},
                                        {field->generator_name(), field->generator()}};
    ExprParser<ExtElem> p(text, std::move(syms),
                          [field](const mpz_class& z) { return field->embed(RatFunc(Rational(z))); });
    return p.parse();
}

namespace {

// FPoly with the value interface the parser expects; division only by
// degree-0 polynomials.
struct PolyVal {
    FPoly p;
    friend PolyVal operator+(const PolyVal& a, const PolyVal& b) { return {a.p + b.p}; }
    friend PolyVal operator-(const PolyVal& a, const PolyVal& b) { return {a.p - b.p}; }
    friend PolyVal operator*(const PolyVal& a, const PolyVal& b) { return {a.p * b.p}; }
    PolyVal operator-() const { return {-p}; }
    PolyVal inverse() const {
        if (p.degree() != 0)
            throw Error("cannot divide by a polynomial in the extension variable");
        return {FPoly::constant(p.coeff(0).inverse())};
    }
    PolyVal pow(unsigned long e) const { return {p.pow(e)}; }
};

} // namespace

FPoly parse_fpoly(const std::string& text, const std::string& var) {
    std::map<std::string, PolyVal> syms{{"t", {FPoly::constant(RatFunc::t())}},
                                        {var, {FPoly::variable()}}};
    ExprParser<PolyVal> p(text, std::move(syms),
                          [](const mpz_class& z) { return PolyVal{FPoly::constant(RatFunc(Rational(z)))}; });
    return p.parse().p;
}

} // namespace twistder
