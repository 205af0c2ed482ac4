#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "daehee/bernoulli.hpp"
#include "daehee/polynomial.hpp"
#include "daehee/rational.hpp"
#include "daehee/series.hpp"
#include "daehee/stirling.hpp"

namespace daehee {

namespace detail {

inline void check_order_k(int k) {
    if (k < 1) {
        throw std::invalid_argument("daehee: order k must be a positive integer");
    }
}

/// t -> -t on a series: flips the sign of every odd-index coefficient.
inline TruncatedSeries negate_variable(const TruncatedSeries& s) {
    std::vector<Rational> c(static_cast<std::size_t>(s.order()) + 1);
    for (int i = 0; i <= s.order(); ++i) {
        c[static_cast<std::size_t>(i)] = i % 2 == 0 ? s.coeff(i) : -s.coeff(i);
    }
    return TruncatedSeries(s.order(), std::move(c));
}

/// Binomial (EGF) convolution c_n = sum_j C(n,j) a_j b_{n-j}.
inline std::vector<Rational> egf_convolve(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b) {
    std::vector<Rational> c(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        Rational acc(0);
        for (std::size_t j = 0; j <= n; ++j) {
            acc += Rational(binomial(BigInt(n), static_cast<int>(j))) * a[j] * b[n - j];
        }
        c[n] = acc;
    }
    return c;
}

}  // namespace detail

/// Order-1 Daehee number D_m = (-1)^m m! / (m+1).
inline Rational daehee1_order1(int m) {
    if (m < 0) {
        throw std::invalid_argument("daehee1_order1: negative index");
    }
    BigInt num = factorial(m);
    if (m % 2 == 1) num = -num;
    return make_rational(std::move(num), m + 1);
}

/// Generating function (log(1+t)/t)^k truncated at the given order.
inline TruncatedSeries daehee1_gf_series(int k, int order) {
    detail::check_order_k(k);
    return TruncatedSeries::log1p(order + 1).shift_divide(1).pow(k);
}

/// Generating function ((1-t) log(1-t) / (-t))^k truncated at the given
/// order, built as (1-t) * (-log(1-t))/t raised to the k-th power.
inline TruncatedSeries daehee2_gf_series(int k, int order) {
    detail::check_order_k(k);
    const TruncatedSeries neg_log1m = -detail::negate_variable(TruncatedSeries::log1p(order + 1));
    const TruncatedSeries one_minus_t =
        TruncatedSeries::constant(Rational(1), order) - TruncatedSeries::identity(order);
    return (one_minus_t * neg_log1m.shift_divide(1)).pow(k);
}

// ---------------------------------------------------------------------------
// First-kind numbers: four independent routes.
// ---------------------------------------------------------------------------

/// Closed form D_n^(k) = S1(n+k,k) / C(n+k,k).
inline Rational daehee1_number_closed(const StirlingCache& stirling, int n, int k) {
    detail::check_order_k(k);
    if (n < 0 || n + k > stirling.max_n()) {
        throw std::out_of_range("daehee1_number_closed: Stirling cache does not cover n+k");
    }
    return make_rational(stirling.s1(n + k, k), binomial(BigInt(n + k), k));
}

/// Series route: n!-th EGF coefficient of (log(1+t)/t)^k.
inline Rational daehee1_number_gf(int n, int k, int truncation) {
    detail::check_order_k(k);
    if (n < 0 || n > truncation) {
        throw std::invalid_argument("daehee1_number_gf: truncation order too small");
    }
    return daehee1_gf_series(k, truncation).egf_coefficient(n);
}

/// Stirling-Bernoulli sum D_n^(k) = sum_l S1(n,l) B_l^(k).
inline Rational daehee1_number_stirling_bernoulli(const StirlingCache& stirling,
                                                  const BernoulliCalculator& bernoulli,
                                                  int n, int k) {
    detail::check_order_k(k);
    Rational acc(0);
    for (int l = 0; l <= n; ++l) {
        acc += Rational(stirling.s1(n, l)) * bernoulli.number(l, k);
    }
    return acc;
}

/// Multinomial route, realized as a (k-1)-fold binomial convolution of the
/// order-1 sequence; identical mathematics to summing
/// C(n; l_1..l_k) D_{l_1} ... D_{l_k} over compositions, at O(k n^2) cost.
inline Rational daehee1_number_multinomial(int n, int k) {
    detail::check_order_k(k);
    if (n < 0) {
        throw std::invalid_argument("daehee1_number_multinomial: negative index");
    }
    std::vector<Rational> base(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        base[static_cast<std::size_t>(m)] = daehee1_order1(m);
    }
    std::vector<Rational> acc = base;
    for (int i = 2; i <= k; ++i) {
        acc = detail::egf_convolve(acc, base);
    }
    return acc[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------
// First-kind polynomials.
// ---------------------------------------------------------------------------

/// D_n^(k)(x) = sum_l S1(n,l) B_l^(k)(x).
inline RationalPolynomial daehee1_poly(const StirlingCache& stirling,
                                       const BernoulliCalculator& bernoulli,
                                       int n, int k) {
    detail::check_order_k(k);
    RationalPolynomial p;
    for (int l = 0; l <= n; ++l) {
        p += Rational(stirling.s1(n, l)) * bernoulli.polynomial(l, k);
    }
    return p;
}

/// Independent generating-function route for the polynomial:
/// D_n^(k)(x) = sum_m C(n,m) D_{n-m}^(k) (x)_m, the t^n EGF coefficient of
/// (log(1+t)/t)^k (1+t)^x with (1+t)^x expanded into falling factorials.
inline RationalPolynomial daehee1_poly_gf(int n, int k) {
    detail::check_order_k(k);
    const TruncatedSeries g = daehee1_gf_series(k, n);
    RationalPolynomial p;
    for (int m = 0; m <= n; ++m) {
        const Rational weight = Rational(binomial(BigInt(n), m)) * g.egf_coefficient(n - m);
        p += weight * falling_factorial_poly(m);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Second-kind numbers and polynomials.
// ---------------------------------------------------------------------------

/// Stirling-Bernoulli sum for the second kind: sum_l [n l] B_l^(k).
inline Rational daehee2_number(const StirlingCache& stirling,
                               const BernoulliCalculator& bernoulli,
                               int n, int k) {
    detail::check_order_k(k);
    Rational acc(0);
    for (int l = 0; l <= n; ++l) {
        acc += Rational(stirling.s1_unsigned(n, l)) * bernoulli.number(l, k);
    }
    return acc;
}

/// Series route: n!-th EGF coefficient of ((1-t) log(1-t)/(-t))^k.
inline Rational daehee2_number_gf(int n, int k, int truncation) {
    detail::check_order_k(k);
    if (n < 0 || n > truncation) {
        throw std::invalid_argument("daehee2_number_gf: truncation order too small");
    }
    return daehee2_gf_series(k, truncation).egf_coefficient(n);
}

/// Second-kind polynomial via sum_l (-1)^{n-l} S1(n,l) B_l^(k)(-x).
inline RationalPolynomial daehee2_poly(const StirlingCache& stirling,
                                       const BernoulliCalculator& bernoulli,
                                       int n, int k) {
    detail::check_order_k(k);
    RationalPolynomial p;
    for (int l = 0; l <= n; ++l) {
        p += Rational(stirling.s1_unsigned(n, l)) *
             bernoulli.polynomial(l, k).substitute_affine(Rational(0), Rational(-1));
    }
    return p;
}

/// Independent generating-function route: the t^n EGF coefficient of
/// ((1-t) log(1-t)/(-t))^k (1-t)^x, with (1-t)^x expanded into
/// (-1)^m (x)_m / m! terms.
inline RationalPolynomial daehee2_poly_gf(int n, int k) {
    detail::check_order_k(k);
    const TruncatedSeries g = daehee2_gf_series(k, n);
    RationalPolynomial p;
    for (int m = 0; m <= n; ++m) {
        Rational weight = Rational(binomial(BigInt(n), m)) * g.egf_coefficient(n - m);
        if (m % 2 == 1) weight = -weight;
        p += weight * falling_factorial_poly(m);
    }
    return p;
}

}  // namespace daehee
