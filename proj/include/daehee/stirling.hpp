#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "daehee/polynomial.hpp"
#include "daehee/rational.hpp"

namespace daehee {

/// Triangular tables of Stirling numbers of both kinds, built once to a
/// caller-specified bound by the integer recurrences
///   S1(n+1,l) = S1(n,l-1) - n*S1(n,l)
///   S2(m+1,n) = n*S2(m,n) + S2(m,n-1)
/// so they can serve as an oracle independent of the series engine.
/// Immutable after construction; reads are freely concurrent.
class StirlingCache {
public:
    explicit StirlingCache(int max_n) : max_n_(max_n) {
        if (max_n < 0) {
            throw std::invalid_argument("StirlingCache: negative bound");
        }
        s1_.resize(static_cast<std::size_t>(max_n) + 1);
        s2_.resize(static_cast<std::size_t>(max_n) + 1);
        s1_[0] = {BigInt(1)};
        s2_[0] = {BigInt(1)};
        for (int n = 1; n <= max_n; ++n) {
            const auto& prev1 = s1_[static_cast<std::size_t>(n - 1)];
            const auto& prev2 = s2_[static_cast<std::size_t>(n - 1)];
            auto& row1 = s1_[static_cast<std::size_t>(n)];
            auto& row2 = s2_[static_cast<std::size_t>(n)];
            row1.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
            row2.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
            for (int l = 1; l < n; ++l) {
                row1[static_cast<std::size_t>(l)] = prev1[static_cast<std::size_t>(l - 1)] -
                                                    (n - 1) * prev1[static_cast<std::size_t>(l)];
                row2[static_cast<std::size_t>(l)] =
                    l * prev2[static_cast<std::size_t>(l)] + prev2[static_cast<std::size_t>(l - 1)];
            }
            // diagonal: the previous row has no entry at index n
            row1[static_cast<std::size_t>(n)] = prev1[static_cast<std::size_t>(n - 1)];
            row2[static_cast<std::size_t>(n)] = prev2[static_cast<std::size_t>(n - 1)];
        }
    }

    int max_n() const { return max_n_; }

    /// Signed Stirling number of the first kind S1(n,l).
    const BigInt& s1(int n, int l) const {
        check_range(n, l);
        return s1_[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)];
    }

    /// Unsigned first-kind bracket [n l] = (-1)^{n-l} S1(n,l).
    BigInt s1_unsigned(int n, int l) const {
        const BigInt& v = s1(n, l);
        return (n - l) % 2 == 0 ? v : -v;
    }

    /// Stirling number of the second kind S2(m,n).
    const BigInt& s2(int m, int n) const {
        check_range(m, n);
        return s2_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
    }

    // Fault-injection hooks so the verification suite can prove it is not
    // vacuous: a tampered table must make identity checks fail.
    void override_s1(int n, int l, BigInt value) {
        check_range(n, l);
        s1_[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)] = std::move(value);
    }

    void override_s2(int m, int n, BigInt value) {
        check_range(m, n);
        s2_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = std::move(value);
    }

private:
    void check_range(int n, int l) const {
        if (n < 0 || n > max_n_ || l < 0 || l > n) {
            throw std::out_of_range("StirlingCache: index outside triangle");
        }
    }

    int max_n_;
    std::vector<std::vector<BigInt>> s1_;
    std::vector<std::vector<BigInt>> s2_;
};

/// Generalized binomial coefficient C(a,m) = (a)_m / m! for any integer upper
/// argument, so that C(-1,0) = 1 and C(n-1,n) = 0 for n >= 1.
inline BigInt binomial(const BigInt& a, int m) {
    if (m < 0) {
        throw std::invalid_argument("binomial: negative lower argument");
    }
    BigInt prod = 1;
    for (int i = 0; i < m; ++i) {
        prod *= a - i;
    }
    return prod / factorial(m);
}

inline BigInt binomial(long long a, int m) { return binomial(BigInt(a), m); }

/// n! / (parts[0]! * parts[1]! * ...); parts must be nonnegative and sum to n.
inline BigInt multinomial(int n, std::span<const int> parts) {
    long long sum = 0;
    for (int part : parts) {
        if (part < 0) {
            throw std::invalid_argument("multinomial: negative part");
        }
        sum += part;
    }
    if (sum != n) {
        throw std::invalid_argument("multinomial: parts do not sum to n");
    }
    BigInt result = factorial(n);
    for (int part : parts) {
        result /= factorial(part);
    }
    return result;
}

/// (x)_n = x(x-1)...(x-n+1), built by iterated multiplication rather than
/// from the S1 table; the two routes cross-check each other.
inline RationalPolynomial falling_factorial_poly(int n) {
    if (n < 0) {
        throw std::invalid_argument("falling_factorial_poly: negative degree");
    }
    RationalPolynomial p = RationalPolynomial::constant(Rational(1));
    for (int i = 0; i < n; ++i) {
        p *= RationalPolynomial{Rational(-i), Rational(1)};
    }
    return p;
}

/// x^(n) = x(x+1)...(x+n-1) = (-1)^n (-x)_n.
inline RationalPolynomial rising_factorial_poly(int n) {
    if (n < 0) {
        throw std::invalid_argument("rising_factorial_poly: negative degree");
    }
    RationalPolynomial p = RationalPolynomial::constant(Rational(1));
    for (int i = 0; i < n; ++i) {
        p *= RationalPolynomial{Rational(i), Rational(1)};
    }
    return p;
}

}  // namespace daehee
