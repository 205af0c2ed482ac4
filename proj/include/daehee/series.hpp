#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "daehee/rational.hpp"

namespace daehee {

/// Truncated formal power series in t over Rational.
///
/// Stores the ordinary coefficients of t^0 .. t^N for a fixed truncation
/// order N; coefficients above N are undefined and never read. Every
/// operation is exact on the stored range, and the order of a binary
/// operation's result is the minimum of the operand orders. Exponential
/// generating function semantics live solely in egf_coefficient, which
/// applies the factorial at the boundary.
class TruncatedSeries {
public:
    /// Zero series of the given truncation order.
    explicit TruncatedSeries(int order)
        : coeffs_(checked_size(order), Rational(0)) {}

    /// Takes ownership of exactly order+1 ordinary coefficients.
    TruncatedSeries(int order, std::vector<Rational> coeffs)
        : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != checked_size(order)) {
            throw std::invalid_argument("TruncatedSeries: coefficient count does not match order");
        }
    }

    static TruncatedSeries constant(const Rational& c, int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// The series t (zero when order is 0).
    static TruncatedSeries identity(int order) {
        TruncatedSeries s(order);
        if (order >= 1) {
            s.coeffs_[1] = 1;
        }
        return s;
    }

    /// Mercator series log(1+t) = t - t^2/2 + t^3/3 - ...
    static TruncatedSeries log1p(int order) {
        TruncatedSeries s(order);
        for (int i = 1; i <= order; ++i) {
            s.coeffs_[static_cast<std::size_t>(i)] = make_rational(i % 2 == 1 ? 1 : -1, i);
        }
        return s;
    }

    /// (1+t)^e for an arbitrary rational exponent e, via the binomial series
    /// with coefficients (e)_m / m!.
    static TruncatedSeries binomial_power(const Rational& exponent, int order) {
        TruncatedSeries s(order);
        Rational c(1);
        s.coeffs_[0] = c;
        for (int m = 1; m <= order; ++m) {
            c *= (exponent - (m - 1)) / m;
            s.coeffs_[static_cast<std::size_t>(m)] = c;
        }
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(int i) const {
        if (i < 0 || i > order()) {
            throw std::out_of_range("TruncatedSeries::coeff: index beyond truncation order");
        }
        return coeffs_[static_cast<std::size_t>(i)];
    }

    /// n! times the ordinary coefficient of t^n.
    Rational egf_coefficient(int n) const {
        if (n < 0 || n > order()) {
            throw std::out_of_range("TruncatedSeries::egf_coefficient: index beyond truncation order");
        }
        return Rational(factorial(n)) * coeffs_[static_cast<std::size_t>(n)];
    }

    TruncatedSeries operator+(const TruncatedSeries& rhs) const {
        const int n = std::min(order(), rhs.order());
        TruncatedSeries s(n);
        for (int i = 0; i <= n; ++i) {
            s.coeffs_[static_cast<std::size_t>(i)] =
                coeffs_[static_cast<std::size_t>(i)] + rhs.coeffs_[static_cast<std::size_t>(i)];
        }
        return s;
    }

    TruncatedSeries operator-(const TruncatedSeries& rhs) const {
        const int n = std::min(order(), rhs.order());
        TruncatedSeries s(n);
        for (int i = 0; i <= n; ++i) {
            s.coeffs_[static_cast<std::size_t>(i)] =
                coeffs_[static_cast<std::size_t>(i)] - rhs.coeffs_[static_cast<std::size_t>(i)];
        }
        return s;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries s(*this);
        for (auto& c : s.coeffs_) {
            c = -c;
        }
        return s;
    }

    /// Exact Cauchy product truncated at the minimum operand order.
    TruncatedSeries operator*(const TruncatedSeries& rhs) const {
        const int n = std::min(order(), rhs.order());
        TruncatedSeries s(n);
        for (int i = 0; i <= n; ++i) {
            if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; i + j <= n; ++j) {
                s.coeffs_[static_cast<std::size_t>(i + j)] +=
                    coeffs_[static_cast<std::size_t>(i)] * rhs.coeffs_[static_cast<std::size_t>(j)];
            }
        }
        return s;
    }

    TruncatedSeries operator*(const Rational& scalar) const {
        TruncatedSeries s(*this);
        for (auto& c : s.coeffs_) {
            c *= scalar;
        }
        return s;
    }

    /// k-th power by exponentiation by squaring; k = 0 gives the constant 1.
    TruncatedSeries pow(int k) const {
        if (k < 0) {
            throw std::invalid_argument("TruncatedSeries::pow: negative exponent");
        }
        TruncatedSeries result = constant(Rational(1), order());
        TruncatedSeries base(*this);
        while (k > 0) {
            if (k & 1) {
                result = result * base;
            }
            k >>= 1;
            if (k > 0) {
                base = base * base;
            }
        }
        return result;
    }

    /// exp of a series with zero constant term, by summing powers: the j-th
    /// term starts at t^j, so the loop stops at the truncation order.
    TruncatedSeries exp() const {
        if (coeffs_[0] != 0) {
            throw std::invalid_argument("TruncatedSeries::exp: nonzero constant term");
        }
        TruncatedSeries result = constant(Rational(1), order());
        TruncatedSeries term = constant(Rational(1), order());
        for (int j = 1; j <= order(); ++j) {
            term = term * *this;
            term = term * make_rational(1, j);
            result = result + term;
        }
        return result;
    }

    /// Formal composition this(inner(t)), requiring inner constant term zero.
    /// Horner-style: nested multiply-accumulate in the inner series.
    TruncatedSeries compose(const TruncatedSeries& inner) const {
        if (inner.coeffs_[0] != 0) {
            throw std::invalid_argument("TruncatedSeries::compose: inner series has nonzero constant term");
        }
        const int n = std::min(order(), inner.order());
        TruncatedSeries result(n);
        for (int i = std::min(order(), n); i >= 0; --i) {
            result = result * inner;
            result.coeffs_[0] += coeffs_[static_cast<std::size_t>(i)];
        }
        return result;
    }

    /// Division by t^j for a series whose first j coefficients vanish.
    /// The result has order reduced by j.
    TruncatedSeries shift_divide(int j) const {
        if (j < 1 || j > order()) {
            throw std::invalid_argument("TruncatedSeries::shift_divide: shift out of range");
        }
        for (int i = 0; i < j; ++i) {
            if (coeffs_[static_cast<std::size_t>(i)] != 0) {
                throw std::invalid_argument("TruncatedSeries::shift_divide: series not divisible by t^j");
            }
        }
        TruncatedSeries s(order() - j);
        for (int i = 0; i <= s.order(); ++i) {
            s.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i + j)];
        }
        return s;
    }

    /// Multiplicative inverse of a series with nonzero constant term, by the
    /// standard recurrence b_n = -(1/a_0) * sum_{j=1..n} a_j b_{n-j}.
    TruncatedSeries reciprocal() const {
        if (coeffs_[0] == 0) {
            throw std::invalid_argument("TruncatedSeries::reciprocal: zero constant term");
        }
        TruncatedSeries s(order());
        const Rational inv0 = Rational(1) / coeffs_[0];
        s.coeffs_[0] = inv0;
        for (int n = 1; n <= order(); ++n) {
            Rational acc(0);
            for (int j = 1; j <= n; ++j) {
                acc += coeffs_[static_cast<std::size_t>(j)] * s.coeffs_[static_cast<std::size_t>(n - j)];
            }
            s.coeffs_[static_cast<std::size_t>(n)] = -inv0 * acc;
        }
        return s;
    }

    friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) = default;

private:
    static std::size_t checked_size(int order) {
        if (order < 0) {
            throw std::invalid_argument("TruncatedSeries: negative truncation order");
        }
        return static_cast<std::size_t>(order) + 1;
    }

    std::vector<Rational> coeffs_;
};

inline TruncatedSeries operator*(const Rational& scalar, const TruncatedSeries& s) {
    return s * scalar;
}

}  // namespace daehee
