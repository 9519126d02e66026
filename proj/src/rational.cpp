#include "lapspec/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>

namespace lapspec {

Rat rational_from_double(double x) {
    if (!std::isfinite(x)) throw OverflowError("cannot convert non-finite double to rational");
    if (x == 0.0) return Rat(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);       // x = mant * 2^exp, |mant| in [0.5, 1)
    auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rat r(scaled);
    if (exp >= 0) {
        r *= Rat(Int(1) << exp);
    } else {
        r /= Rat(Int(1) << -exp);
    }
    return r;
}

Rat rational_from_decimal(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) -> Rat {
        throw ParseError("bad decimal literal '" + std::string(text) + "': " + msg, 1,
                         static_cast<int>(pos) + 1);
    };

    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = (text[pos] == '-');
        ++pos;
    }

    Int mantissa = 0;
    long long frac_digits = 0;
    bool any_digit = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        mantissa = mantissa * 10 + (text[pos] - '0');
        any_digit = true;
        ++pos;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            mantissa = mantissa * 10 + (text[pos] - '0');
            ++frac_digits;
            any_digit = true;
            ++pos;
        }
    }
    if (!any_digit) return fail("no digits");

    long long exponent = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool exp_neg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            exp_neg = (text[pos] == '-');
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            return fail("empty exponent");
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            exponent = exponent * 10 + (text[pos] - '0');
            if (exponent > 9999) return fail("exponent out of range");
            ++pos;
        }
        if (exp_neg) exponent = -exponent;
    }
    if (pos != text.size()) return fail("trailing characters");

    long long net = exponent - frac_digits;
    Rat r(mantissa);
    if (net > 0) {
        Int p10 = 1;
        for (long long i = 0; i < net; ++i) p10 *= 10;
        r *= Rat(p10);
    } else if (net < 0) {
        Int p10 = 1;
        for (long long i = 0; i < -net; ++i) p10 *= 10;
        r /= Rat(p10);
    }
    return negative ? Rat(-r) : r;
}

std::string rational_to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::size_t rational_bits(const Rat& r) {
    const Int num = boost::multiprecision::abs(boost::multiprecision::numerator(r));
    const Int den = boost::multiprecision::denominator(r);
    std::size_t bits = 0;
    if (num != 0) bits += boost::multiprecision::msb(num) + 1;
    if (den != 0) bits += boost::multiprecision::msb(den) + 1;
    return bits;
}

} // namespace lapspec
