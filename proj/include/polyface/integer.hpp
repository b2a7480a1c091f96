#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyface {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(a, b); zero when b < 0, a < 0 or a < b.
inline Integer binom(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < 0 || a < b) return 0;
    if (b > a - b) b = a - b;
    Integer result = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

inline std::string to_string(const Integer& x) { return x.str(); }

/// "p/q" with q >= 1 and gcd(p, q) = 1; integers are written as "p/1".
inline std::string to_string(const Rational& x) {
    return boost::multiprecision::numerator(x).str() + "/" +
           boost::multiprecision::denominator(x).str();
}

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty rational component");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("bad rational: " + std::string(text));
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw std::invalid_argument("bad rational: " + std::string(text));
        return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace polyface
