#ifndef TWISTDER_PARSER_HPP
#define TWISTDER_PARSER_HPP

#include <gmpxx.h>

#include <cctype>
#include <functional>
#include <map>
#include <string>

#include "twistder/error.hpp"
#include "twistder/extfield.hpp"
#include "twistder/ratfunc.hpp"

namespace twistder {

// Recursive-descent parser for the expression grammar: integers, declared
// symbols, + - * / ^ with nonnegative integer exponents, parentheses;
// precedence ^ > unary - > * / > + -.  Templated over the value type so the
// same grammar serves Q(t), extension elements and minimal polynomials.
template <class V>
class ExprParser {
public:
    ExprParser(std::string text,
               std::map<std::string, V> symbols,
               std::function<V(const mpz_class&)> make_int)
        : text_(std::move(text)), symbols_(std::move(symbols)), make_int_(std::move(make_int)) {}

    V parse() {
        V v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
        return v;
    }

private:
    V expr() {
        V v = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    V term() {
        V v = unary();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                V d = unary();
                try {
                    v = v * d.inverse();
                } catch (const Error& e) {
                    throw ParseError(at, e.what());
                }
            } else {
                return v;
            }
        }
    }

    V unary() {
        skip_ws();
        if (accept('-')) return -unary();
        return power();
    }

    V power() {
        V v = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError(at, "exponent must be a nonnegative integer");
            mpz_class e = integer_literal();
            if (!e.fits_ulong_p()) throw ParseError(at, "exponent too large");
            return pow_value(v, e.get_ui());
        }
        return v;
    }

    V atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            V v = expr();
            skip_ws();
            if (!accept(')')) throw ParseError(pos_, "expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return make_int_(integer_literal());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            auto it = symbols_.find(name);
            if (it == symbols_.end())
                throw ParseError(at, "unknown symbol '" + name + "'");
            return it->second;
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    mpz_class integer_literal() {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return mpz_class(digits);
    }

    static V pow_value(const V& v, unsigned long e) { return v.pow(e); }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string text_;
    std::size_t pos_ = 0;
    std::map<std::string, V> symbols_;
    std::function<V(const mpz_class&)> make_int_;
};

// Element of F = Q(t); any other symbol (in particular an extension
// generator) is rejected.
RatFunc parse_ratfunc(const std::string& text);

// Element of E; both t and the generator symbol are in scope.
ExtElem parse_ext_elem(const std::string& text, const ExtFieldPtr& field);

// Polynomial in the named variable with coefficients in Q(t), used for
// minimal polynomials before the field exists.  Division is restricted to
// degree-0 divisors.
FPoly parse_fpoly(const std::string& text, const std::string& var);

} // namespace twistder

#endif
