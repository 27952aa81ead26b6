#include "haarpoly/rational.hpp"

#include "haarpoly/errors.hpp"

#include <cctype>

namespace haarpoly {

Integer rational_floor(const Rational& q) {
    Integer num = numerator(q);
    Integer den = denominator(q); // canonical form: den > 0
    Integer quot, rem;
    divide_qr(num, den, quot, rem); // truncates toward zero
    if (rem != 0 && num < 0) --quot;
    return quot;
}

std::string rational_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational_str(const std::string& text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) -> Rational { throw ParseError(msg, pos); };
    if (text.empty()) return fail("empty rational");
    std::size_t start = 0;
    bool neg = false;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        start = 1;
    }
    std::size_t slash = text.find('/');
    std::string num_part = text.substr(start, slash == std::string::npos ? std::string::npos : slash - start);
    if (num_part.empty()) return fail("missing numerator");
    for (char ch : num_part) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return fail("bad digit in rational");
    }
    Integer num(num_part);
    Integer den(1);
    if (slash != std::string::npos) {
        pos = slash + 1;
        std::string den_part = text.substr(slash + 1);
        if (den_part.empty()) return fail("missing denominator");
        for (char ch : den_part) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) return fail("bad digit in denominator");
        }
        den = Integer(den_part);
        if (den == 0) return fail("zero denominator");
    }
    Rational q(num, den);
    return neg ? Rational(-q) : q;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = o.norm2();
    if (n == 0) throw DomainError("division by zero");
    // (a+bi)/(c+di) = (a+bi)(c-di)/|c+di|^2
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re != 0) out += rational_str(re);
    if (im != 0) {
        if (im == 1) {
            out += out.empty() ? "i" : "+i";
        } else if (im == -1) {
            out += "-i";
        } else {
            std::string istr = rational_str(im);
            if (!out.empty() && istr[0] != '-') out += "+";
            out += istr + "i";
        }
    }
    return out;
}

} // namespace haarpoly
