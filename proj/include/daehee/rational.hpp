#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace daehee {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational scalar. The backend keeps every value
/// in lowest terms with a positive denominator; all arithmetic is exact.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }

inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Builds num/den, accepting any sign of den. Rejects den == 0.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline BigInt factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: negative argument");
    }
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

/// Serializes as "p" or "p/q", lowest terms, q > 0.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

/// Parses "p" or "p/q" with optional leading '-'. The inverse of to_string,
/// but accepts non-canonical input (e.g. "2/4") and normalizes it.
inline Rational parse_rational(const std::string& text) {
    const auto is_integer = [](const std::string& s) {
        std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer(text)) {
            throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
        }
        return Rational(BigInt(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den)) {
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
    return make_rational(BigInt(num), BigInt(den));
}

}  // namespace daehee
