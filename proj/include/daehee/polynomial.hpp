#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "daehee/rational.hpp"

namespace daehee {

/// Dense univariate polynomial over Rational; coefficient i multiplies x^i.
/// Canonical form: the highest stored coefficient of a nonzero polynomial is
/// nonzero, and the zero polynomial stores no coefficients at all.
class RationalPolynomial {
public:
    RationalPolynomial() = default;

    RationalPolynomial(std::initializer_list<Rational> coeffs)
        : coeffs_(coeffs) {
        trim();
    }

    explicit RationalPolynomial(std::vector<Rational> coeffs)
        : coeffs_(std::move(coeffs)) {
        trim();
    }

    static RationalPolynomial constant(Rational c) {
        RationalPolynomial p;
        if (c != 0) {
            p.coeffs_.push_back(std::move(c));
        }
        return p;
    }

    static RationalPolynomial monomial(int deg, Rational coeff = Rational(1)) {
        if (deg < 0) {
            throw std::invalid_argument("RationalPolynomial::monomial: negative degree");
        }
        RationalPolynomial p;
        if (coeff != 0) {
            p.coeffs_.assign(static_cast<std::size_t>(deg) + 1, Rational(0));
            p.coeffs_.back() = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Highest nonzero index; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^i; zero beyond the stored degree.
    const Rational& coeff(int i) const {
        static const Rational zero(0);
        if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) {
            return zero;
        }
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Exact Horner evaluation.
    Rational operator()(const Rational& x) const {
        Rational value(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            value = value * x + *it;
        }
        return value;
    }

    RationalPolynomial& operator+=(const RationalPolynomial& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size(), Rational(0));
        }
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
            coeffs_[i] += rhs.coeffs_[i];
        }
        trim();
        return *this;
    }

    RationalPolynomial& operator-=(const RationalPolynomial& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size(), Rational(0));
        }
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
            coeffs_[i] -= rhs.coeffs_[i];
        }
        trim();
        return *this;
    }

    RationalPolynomial& operator*=(const RationalPolynomial& rhs) {
        if (is_zero() || rhs.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
            }
        }
        coeffs_ = std::move(prod);
        trim();
        return *this;
    }

    RationalPolynomial& operator*=(const Rational& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) {
            c *= s;
        }
        return *this;
    }

    RationalPolynomial operator-() const {
        RationalPolynomial p(*this);
        for (auto& c : p.coeffs_) {
            c = -c;
        }
        return p;
    }

    /// Exact substitution p(a + b*x), evaluated by Horner over polynomials.
    RationalPolynomial substitute_affine(const Rational& a, const Rational& b) const {
        const RationalPolynomial arg{a, b};
        RationalPolynomial result;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            result *= arg;
            result += constant(*it);
        }
        return result;
    }

    friend bool operator==(const RationalPolynomial& lhs, const RationalPolynomial& rhs) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rational> coeffs_;
};

inline RationalPolynomial operator+(RationalPolynomial lhs, const RationalPolynomial& rhs) {
    lhs += rhs;
    return lhs;
}

inline RationalPolynomial operator-(RationalPolynomial lhs, const RationalPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
}

inline RationalPolynomial operator*(RationalPolynomial lhs, const RationalPolynomial& rhs) {
    lhs *= rhs;
    return lhs;
}

inline RationalPolynomial operator*(RationalPolynomial lhs, const Rational& s) {
    lhs *= s;
    return lhs;
}

inline RationalPolynomial operator*(const Rational& s, RationalPolynomial rhs) {
    rhs *= s;
    return rhs;
}

/// "[c0, c1, ...]" ascending powers; "[]" for the zero polynomial.
inline std::string to_string(const RationalPolynomial& p) {
    std::string s = "[";
    for (int i = 0; i <= p.degree(); ++i) {
        if (i > 0) s += ", ";
        s += to_string(p.coeff(i));
    }
    s += "]";
    return s;
}

}  // namespace daehee
