#pragma once

#include <stdexcept>
#include <vector>

#include "daehee/polynomial.hpp"
#include "daehee/rational.hpp"
#include "daehee/series.hpp"
#include "daehee/stirling.hpp"

namespace daehee {

/// Higher-order (Nörlund) Bernoulli numbers B_n^(a) and polynomials
/// B_n^(a)(x) for nonnegative integer order a.
///
/// The base series (e^t-1)/t is inverted once per truncation order by the
/// unit-series reciprocal recurrence; its powers up to alpha_max are cached
/// at construction, so every (n, a) lookup is a coefficient read. n-dependent
/// orders such as n+k+1 go through the same path. Immutable after
/// construction; concurrent reads need no coordination.
class BernoulliCalculator {
public:
    explicit BernoulliCalculator(int truncation_order, int alpha_max = -1)
        : order_(truncation_order),
          alpha_max_(alpha_max < 0 ? truncation_order : alpha_max) {
        if (order_ < 0) {
            throw std::invalid_argument("BernoulliCalculator: negative truncation order");
        }
        // (e^t - 1)/t has ordinary coefficients 1/(i+1)!.
        TruncatedSeries base(order_);
        {
            std::vector<Rational> c(static_cast<std::size_t>(order_) + 1);
            BigInt fact = 1;
            for (int i = 0; i <= order_; ++i) {
                fact *= i + 1;
                c[static_cast<std::size_t>(i)] = make_rational(1, fact);
            }
            base = TruncatedSeries(order_, std::move(c));
        }
        const TruncatedSeries inverse = base.reciprocal();  // t/(e^t-1)
        powers_.reserve(static_cast<std::size_t>(alpha_max_) + 1);
        powers_.push_back(TruncatedSeries::constant(Rational(1), order_));
        for (int a = 1; a <= alpha_max_; ++a) {
            powers_.push_back(powers_.back() * inverse);
        }
    }

    int truncation_order() const { return order_; }
    int alpha_max() const { return alpha_max_; }

    /// B_n^(a) = n! * [t^n] (t/(e^t-1))^a.
    Rational number(int n, int alpha) const {
        check_args(n, alpha);
        return powers_[static_cast<std::size_t>(alpha)].egf_coefficient(n);
    }

    /// B_n^(a)(x) = sum_l C(n,l) B_l^(a) x^{n-l}.
    RationalPolynomial polynomial(int n, int alpha) const {
        check_args(n, alpha);
        std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
        for (int l = 0; l <= n; ++l) {
            coeffs[static_cast<std::size_t>(n - l)] = Rational(binomial(BigInt(n), l)) * number(l, alpha);
        }
        return RationalPolynomial(std::move(coeffs));
    }

    Rational polynomial_at(int n, int alpha, const Rational& x0) const {
        return polynomial(n, alpha)(x0);
    }

private:
    void check_args(int n, int alpha) const {
        if (n < 0 || n > order_) {
            throw std::out_of_range("BernoulliCalculator: degree beyond truncation order");
        }
        if (alpha < 0 || alpha > alpha_max_) {
            throw std::out_of_range("BernoulliCalculator: order alpha beyond cached bound");
        }
    }

    int order_;
    int alpha_max_;
    std::vector<TruncatedSeries> powers_;
};

}  // namespace daehee
