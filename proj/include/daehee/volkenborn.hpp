#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "daehee/polynomial.hpp"
#include "daehee/rational.hpp"
#include "daehee/stirling.hpp"

namespace daehee {

/// p-adic valuation of a rational, with a distinguished infinite value for 0.
class PadicValuation {
public:
    static PadicValuation infinite() { return PadicValuation(true, 0); }
    static PadicValuation finite(long long v) { return PadicValuation(false, v); }

    bool is_infinite() const { return infinite_; }

    long long value() const {
        if (infinite_) {
            throw std::logic_error("PadicValuation: no finite value for v_p(0)");
        }
        return value_;
    }

    friend bool operator==(const PadicValuation&, const PadicValuation&) = default;

    /// Infinite compares greater than every finite valuation.
    friend bool operator<(const PadicValuation& a, const PadicValuation& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const PadicValuation& a, const PadicValuation& b) { return !(b < a); }
    friend bool operator>(const PadicValuation& a, const PadicValuation& b) { return b < a; }
    friend bool operator>=(const PadicValuation& a, const PadicValuation& b) { return !(a < b); }

private:
    PadicValuation(bool inf, long long v) : infinite_(inf), value_(v) {}

    bool infinite_;
    long long value_;
};

inline std::string to_string(const PadicValuation& v) {
    return v.is_infinite() ? "inf" : std::to_string(v.value());
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

/// v_p(r) = v_p(numerator) - v_p(denominator); infinite for r = 0.
inline PadicValuation valuation(const Rational& r, long long p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("valuation: p must be prime");
    }
    if (r == 0) {
        return PadicValuation::infinite();
    }
    const auto count = [&](BigInt n) {
        long long v = 0;
        while (n % p == 0) {
            n /= p;
            ++v;
        }
        return v;
    };
    return PadicValuation::finite(count(numerator(r)) - count(denominator(r)));
}

struct VolkenbornOptions {
    // Maximum number of integrand evaluations a literal partial sum may use.
    long long budget = 2'000'000;
    // When the budget is exceeded, fall back to Faulhaber closed forms.
    bool allow_closed_form = true;
};

namespace detail {

/// Order-1 Bernoulli numbers B_0..B_nmax (B_1 = -1/2) by the classical
/// recurrence sum_{j<=m} C(m+1,j) B_j = 0 -- deliberately independent of the
/// series engine so the p-adic module can act as an oracle against it.
inline std::vector<Rational> bernoulli_row(int nmax) {
    std::vector<Rational> b;
    b.reserve(static_cast<std::size_t>(nmax) + 1);
    b.emplace_back(1);
    for (int m = 1; m <= nmax; ++m) {
        Rational acc(0);
        for (int j = 0; j < m; ++j) {
            acc += Rational(binomial(BigInt(m + 1), j)) * b[static_cast<std::size_t>(j)];
        }
        b.push_back(-acc / (m + 1));
    }
    return b;
}

/// sum_{x=0}^{M-1} x^j = (1/(j+1)) sum_{i=0}^{j} C(j+1,i) B_i M^{j+1-i}.
inline Rational power_sum(int j, const BigInt& count, const std::vector<Rational>& bernoulli) {
    Rational acc(0);
    BigInt m_pow = count;  // M^{j+1-i}, starting at i = j
    for (int i = j; i >= 0; --i) {
        acc += Rational(binomial(BigInt(j + 1), i)) * bernoulli[static_cast<std::size_t>(i)] * Rational(m_pow);
        m_pow *= count;
    }
    return acc / (j + 1);
}

/// Literal sum_{x=0}^{count-1} f(x), with f scaled to integer coefficients
/// so the inner loop is pure big-integer Horner.
inline Rational literal_sum(const RationalPolynomial& f, const BigInt& count) {
    BigInt common_den = 1;
    for (int i = 0; i <= f.degree(); ++i) {
        const BigInt& d = denominator(f.coeff(i));
        common_den = common_den / gcd(common_den, d) * d;
    }
    std::vector<BigInt> scaled(static_cast<std::size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) {
        scaled[static_cast<std::size_t>(i)] =
            numerator(f.coeff(i)) * (common_den / denominator(f.coeff(i)));
    }
    BigInt total = 0;
    for (BigInt x = 0; x < count; ++x) {
        BigInt value = 0;
        for (auto it = scaled.rbegin(); it != scaled.rend(); ++it) {
            value = value * x + *it;
        }
        total += value;
    }
    return make_rational(std::move(total), std::move(common_den));
}

/// The averaging transform behind the iterated integral:
/// T(g)(s) = integral of g(s + x) dmu(x) = sum_m s^m sum_{i>=m} g_i C(i,m) B_{i-m}.
inline RationalPolynomial integrate_one_variable(const RationalPolynomial& g,
                                                 const std::vector<Rational>& bernoulli) {
    if (g.is_zero()) return g;
    std::vector<Rational> out(static_cast<std::size_t>(g.degree()) + 1, Rational(0));
    for (int m = 0; m <= g.degree(); ++m) {
        for (int i = m; i <= g.degree(); ++i) {
            out[static_cast<std::size_t>(m)] +=
                g.coeff(i) * Rational(binomial(BigInt(i), m)) * bernoulli[static_cast<std::size_t>(i - m)];
        }
    }
    return RationalPolynomial(std::move(out));
}

}  // namespace detail

/// Exact Volkenborn integral of a polynomial: sum_l coeff_l * B_l.
inline Rational volkenborn_exact(const RationalPolynomial& f) {
    if (f.is_zero()) return Rational(0);
    const std::vector<Rational> bern = detail::bernoulli_row(f.degree());
    Rational acc(0);
    for (int l = 0; l <= f.degree(); ++l) {
        acc += f.coeff(l) * bern[static_cast<std::size_t>(l)];
    }
    return acc;
}

/// Exact partial sum (1/p^N) sum_{x=0}^{p^N-1} f(x). Loops literally while
/// p^N stays within the evaluation budget, otherwise switches to Faulhaber
/// closed-form power sums (identical exact value).
inline Rational volkenborn_partial(const RationalPolynomial& f, long long p, int depth,
                                   const VolkenbornOptions& options = {}) {
    if (!is_prime(p)) {
        throw std::invalid_argument("volkenborn_partial: p must be prime");
    }
    if (depth < 0) {
        throw std::invalid_argument("volkenborn_partial: negative depth");
    }
    const BigInt count = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(depth));
    if (count <= options.budget) {
        if (f.is_zero()) return Rational(0);
        return detail::literal_sum(f, count) / Rational(count);
    }
    if (!options.allow_closed_form) {
        throw std::domain_error("volkenborn_partial: evaluation budget exceeded and closed form disabled");
    }
    if (f.is_zero()) return Rational(0);
    const std::vector<Rational> bern = detail::bernoulli_row(f.degree() + 1);
    Rational acc(0);
    for (int j = 0; j <= f.degree(); ++j) {
        acc += f.coeff(j) * detail::power_sum(j, count, bern);
    }
    return acc / Rational(count);
}

enum class FactorialKind { falling, rising };

/// Builds the shifted factorial integrand (s + shift)_n or (s + shift)^(n)
/// as a polynomial in the variable sum s.
inline RationalPolynomial factorial_integrand(int n, const Rational& shift, FactorialKind kind) {
    const RationalPolynomial base =
        kind == FactorialKind::falling ? falling_factorial_poly(n) : rising_factorial_poly(n);
    if (shift == 0) return base;
    return base.substitute_affine(shift, Rational(1));
}

/// k-fold Volkenborn integral of a shifted falling/rising factorial in the
/// sum of the integration variables. Multivariate integrands are never
/// materialized: one variable is integrated out per step, keeping the
/// intermediate result a univariate polynomial in the remaining sum.
inline Rational volkenborn_exact_multi(int k, int n, const Rational& shift, FactorialKind kind) {
    if (k < 1) {
        throw std::invalid_argument("volkenborn_exact_multi: k must be positive");
    }
    RationalPolynomial g = factorial_integrand(n, shift, kind);
    const std::vector<Rational> bern = detail::bernoulli_row(n);
    for (int step = 1; step < k; ++step) {
        g = detail::integrate_one_variable(g, bern);
    }
    return volkenborn_exact(g);
}

/// k-fold partial sum p^{-Nk} sum over all k-tuples below p^N of the same
/// integrand; literal odometer loop within budget, iterated closed-form
/// averaging beyond it.
inline Rational volkenborn_partial_multi(const RationalPolynomial& f, int k, long long p, int depth,
                                         const VolkenbornOptions& options = {}) {
    if (k < 1) {
        throw std::invalid_argument("volkenborn_partial_multi: k must be positive");
    }
    if (k == 1) {
        return volkenborn_partial(f, p, depth, options);
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("volkenborn_partial_multi: p must be prime");
    }
    if (depth < 0) {
        throw std::invalid_argument("volkenborn_partial_multi: negative depth");
    }
    const BigInt count = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(depth));
    const BigInt tuples = boost::multiprecision::pow(count, static_cast<unsigned>(k));
    if (tuples <= options.budget) {
        if (f.is_zero()) return Rational(0);
        std::vector<BigInt> odometer(static_cast<std::size_t>(k), BigInt(0));
        Rational acc(0);
        while (true) {
            BigInt s = 0;
            for (const BigInt& x : odometer) s += x;
            acc += f(Rational(s));
            int pos = 0;
            while (pos < k) {
                auto& digit = odometer[static_cast<std::size_t>(pos)];
                if (++digit < count) break;
                digit = 0;
                ++pos;
            }
            if (pos == k) break;
        }
        return acc / Rational(tuples);
    }
    if (!options.allow_closed_form) {
        throw std::domain_error("volkenborn_partial_multi: evaluation budget exceeded and closed form disabled");
    }
    if (f.is_zero()) return Rational(0);
    // Averaging transform A(g)(s) = (1/p^N) sum_{x<p^N} g(s+x), applied once
    // per variable via binomial expansion and closed-form power sums.
    const std::vector<Rational> bern = detail::bernoulli_row(f.degree() + 1);
    RationalPolynomial g = f;
    for (int step = 0; step < k; ++step) {
        std::vector<Rational> out(static_cast<std::size_t>(g.degree()) + 1, Rational(0));
        for (int m = 0; m <= g.degree(); ++m) {
            for (int i = m; i <= g.degree(); ++i) {
                out[static_cast<std::size_t>(m)] += g.coeff(i) * Rational(binomial(BigInt(i), m)) *
                                                    detail::power_sum(i - m, count, bern);
            }
        }
        g = RationalPolynomial(std::move(out)) * (Rational(1) / Rational(count));
    }
    return g.coeff(0);
}

struct DifferenceIdentity {
    Rational integral_shifted;    // I(f(x+1))
    Rational integral;            // I(f)
    Rational derivative_at_zero;  // f'(0)
};

/// Exact witnesses for I(f_1) - I(f) = f'(0).
inline DifferenceIdentity difference_identity_check(const RationalPolynomial& f) {
    return DifferenceIdentity{
        volkenborn_exact(f.substitute_affine(Rational(1), Rational(1))),
        volkenborn_exact(f),
        f.coeff(1),
    };
}

struct VolkenbornProbe {
    long long p = 0;
    int depth = 0;
    RationalPolynomial integrand;
    Rational partial_sum;
    Rational exact_value;
    PadicValuation error_valuation = PadicValuation::infinite();
};

/// One probe per depth in [depth_min, depth_max], measuring how fast the
/// partial sums approach the exact integral p-adically.
inline std::vector<VolkenbornProbe> convergence_probe(const RationalPolynomial& f, long long p,
                                                      int depth_min, int depth_max,
                                                      const VolkenbornOptions& options = {}) {
    if (depth_min > depth_max) {
        throw std::invalid_argument("convergence_probe: empty depth range");
    }
    const Rational exact = volkenborn_exact(f);
    std::vector<VolkenbornProbe> probes;
    probes.reserve(static_cast<std::size_t>(depth_max - depth_min) + 1);
    for (int depth = depth_min; depth <= depth_max; ++depth) {
        const Rational partial = volkenborn_partial(f, p, depth, options);
        probes.push_back(VolkenbornProbe{p, depth, f, partial, exact, valuation(partial - exact, p)});
    }
    return probes;
}

}  // namespace daehee
