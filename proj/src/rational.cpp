#include "coverdyn/rational.hpp"

#include <cctype>

namespace coverdyn {

Rat rat_make(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

Rat rat_parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = text.find('/');
    auto parse_int = [](const std::string& s) -> BigInt {
        if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("sign without digits in rational literal");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("bad digit in rational literal: " + s);
        return BigInt(s);
    };
    if (slash == std::string::npos) return Rat(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return rat_make(std::move(num), std::move(den));
}

std::string rat_str(const Rat& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

double rat_to_double(const Rat& value) {
    BigInt num = numerator(value);
    BigInt den = denominator(value);
    if (num == 0) return 0.0;
    bool negative = num < 0;
    if (negative) num = -num;
    // Drop common magnitude so each part fits a double comfortably.
    auto bits = [](const BigInt& x) {
        return static_cast<long>(boost::multiprecision::msb(x));
    };
    long excess = std::max(bits(num), bits(den)) - 512;
    if (excess > 0) {
        num >>= excess;
        den >>= excess;
        if (den == 0) den = 1;
    }
    double result = num.convert_to<double>() / den.convert_to<double>();
    return negative ? -result : result;
}

}  // namespace coverdyn
