#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "daehee/bernoulli.hpp"
#include "daehee/daehee.hpp"
#include "daehee/polynomial.hpp"
#include "daehee/rational.hpp"
#include "daehee/series.hpp"
#include "daehee/stirling.hpp"
#include "daehee/volkenborn.hpp"

namespace daehee {

/// The identity catalogue, one entry per checkable identity. Ids follow
/// the catalogue naming: T* for theorems, C* for corollaries, E* for
/// standalone equations.
enum class IdentityId {
    T1,   // D_n^(k) = S1(n+k,k) / C(n+k,k)
    C2,   // D_n^(k) = B_n^(n+k+1)(1)
    T3a,  // D_n^(k) = sum over compositions of multinomial * D products
    T3b,  // D_n^(k) = sum_l S1(n,l) B_l^(k)
    T4,   // B_m^(k) = sum_n D_n^(k) S2(m,n)
    T5,   // D_n^(k)(x) = sum_l S1(n,l) B_l^(k)(x)
    T6,   // D_n^(k)(x) = B_n^(n+k+1)(x+1)
    T7,   // B_m^(k)(x) = sum_n S2(m,n) D_n^(k)(x)
    T8,   // second-kind numbers: Stirling sum vs generating function
    T9,   // B_m^(k) = sum_n Dhat_n^(k) (-1)^{m-n} S2(m,n)
    T10,  // (-1)^n Dhat_n^(k)(x) = B_n^(n+k+1)(x+k+1)
    T11,  // B_m^(k)(-x) = sum_n Dhat_n^(k)(x) (-1)^{m-n} S2(m,n)
    T12,  // (-1)^n D_n^(k)(x)/n! = sum_m C(n-1,n-m)/m! (-1)^m Dhat_m^(k)(-x)
    E36,  // Dhat_n^(k)(x)/n! = sum_m C(n-1,n-m)/m! D_m^(k)(-x)
    E4,   // I(f_1) - I(f) = f'(0)
    E9,   // integral of the binomial series coefficients: I((x)_n) = D_n
    E12,  // (log(1+t)/t)^k = sum B_n^(n+k+1)(1) t^n/n!
    E19,  // (log(1+t)/t)^k (1+t)^x at sampled x vs the polynomial route
};

inline constexpr std::array<IdentityId, 18> kAllIdentities = {
    IdentityId::T1,  IdentityId::C2,  IdentityId::T3a, IdentityId::T3b, IdentityId::T4,
    IdentityId::T5,  IdentityId::T6,  IdentityId::T7,  IdentityId::T8,  IdentityId::T9,
    IdentityId::T10, IdentityId::T11, IdentityId::T12, IdentityId::E36, IdentityId::E4,
    IdentityId::E9,  IdentityId::E12, IdentityId::E19,
};

inline std::string to_string(IdentityId id) {
    switch (id) {
        case IdentityId::T1: return "T1";
        case IdentityId::C2: return "C2";
        case IdentityId::T3a: return "T3a";
        case IdentityId::T3b: return "T3b";
        case IdentityId::T4: return "T4";
        case IdentityId::T5: return "T5";
        case IdentityId::T6: return "T6";
        case IdentityId::T7: return "T7";
        case IdentityId::T8: return "T8";
        case IdentityId::T9: return "T9";
        case IdentityId::T10: return "T10";
        case IdentityId::T11: return "T11";
        case IdentityId::T12: return "T12";
        case IdentityId::E36: return "E36";
        case IdentityId::E4: return "E4";
        case IdentityId::E9: return "E9";
        case IdentityId::E12: return "E12";
        case IdentityId::E19: return "E19";
    }
    throw std::logic_error("to_string(IdentityId): unknown id");
}

inline std::optional<IdentityId> identity_from_string(const std::string& name) {
    for (IdentityId id : kAllIdentities) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

struct GridSpec {
    int n_max = 0;
    int k_max = 1;
    std::vector<Rational> x_samples;
};

struct Counterexample {
    std::vector<std::pair<std::string, std::string>> indices;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    IdentityId id = IdentityId::T1;
    GridSpec grid;
    bool passed = false;
    std::optional<Counterexample> first_failure;
    std::chrono::microseconds elapsed{0};
};

inline bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        if (!r.passed) return false;
    }
    return true;
}

/// Executable catalogue of the identity suite. Caches (Stirling tables,
/// Bernoulli series powers, Daehee polynomials, generating functions) are
/// built once at construction and immutable afterwards, so checks are pure
/// and may fan out across threads. Iteration order inside each identity is
/// n ascending, then k ascending, then sample order: the recorded
/// counterexample is always the first one in that order.
class IdentityChecker {
public:
    IdentityChecker(int n_max, int k_max)
        : IdentityChecker(n_max, k_max, StirlingCache(capacity_bound(n_max, k_max))) {}

    /// Accepts a caller-supplied Stirling table (sized at least to
    /// n_max + k_max + 2) so fault-injection tests can tamper with it.
    IdentityChecker(int n_max, int k_max, StirlingCache stirling)
        : n_max_(n_max),
          k_max_(k_max),
          order_(capacity_bound(n_max, k_max)),
          stirling_(std::move(stirling)),
          bernoulli_(order_, n_max + k_max + 1) {
        if (stirling_.max_n() < order_) {
            throw std::invalid_argument("IdentityChecker: Stirling cache smaller than required bound");
        }
        const TruncatedSeries d1_base = TruncatedSeries::log1p(order_ + 1).shift_divide(1);
        const TruncatedSeries d2_base = [&] {
            const TruncatedSeries neg_log1m =
                -detail::negate_variable(TruncatedSeries::log1p(order_ + 1));
            const TruncatedSeries one_minus_t =
                TruncatedSeries::constant(Rational(1), order_) - TruncatedSeries::identity(order_);
            return one_minus_t * neg_log1m.shift_divide(1);
        }();
        d1_gf_.push_back(TruncatedSeries::constant(Rational(1), order_));
        d2_gf_.push_back(TruncatedSeries::constant(Rational(1), order_));
        for (int k = 1; k <= k_max_; ++k) {
            d1_gf_.push_back(d1_gf_.back() * d1_base);
            d2_gf_.push_back(d2_gf_.back() * d2_base);
        }
        falling_polys_.reserve(static_cast<std::size_t>(n_max_) + 1);
        for (int n = 0; n <= n_max_; ++n) {
            falling_polys_.push_back(falling_factorial_poly(n));
        }
        d1_polys_.resize(static_cast<std::size_t>(k_max_) + 1);
        d2_polys_.resize(static_cast<std::size_t>(k_max_) + 1);
        for (int k = 1; k <= k_max_; ++k) {
            for (int n = 0; n <= n_max_; ++n) {
                d1_polys_[static_cast<std::size_t>(k)].push_back(daehee1_poly(stirling_, bernoulli_, n, k));
                d2_polys_[static_cast<std::size_t>(k)].push_back(daehee2_poly(stirling_, bernoulli_, n, k));
            }
        }
    }

    static std::vector<Rational> default_x_samples() {
        return {Rational(0), Rational(1), Rational(-1), make_rational(1, 2), make_rational(-3, 2)};
    }

    int n_max() const { return n_max_; }
    int k_max() const { return k_max_; }
    const StirlingCache& stirling() const { return stirling_; }
    const BernoulliCalculator& bernoulli() const { return bernoulli_; }

    VerificationReport check_identity(IdentityId id, int n_max, int k_max,
                                      const std::vector<Rational>& x_samples) const {
        if (n_max < 0 || n_max > n_max_ || k_max < 1 || k_max > k_max_) {
            throw std::invalid_argument("check_identity: grid exceeds cache capacity");
        }
        const auto start = std::chrono::steady_clock::now();
        std::optional<Counterexample> failure;
        switch (id) {
            case IdentityId::T1: failure = check_t1(n_max, k_max); break;
            case IdentityId::C2: failure = check_c2(n_max, k_max); break;
            case IdentityId::T3a: failure = check_t3a(n_max, k_max); break;
            case IdentityId::T3b: failure = check_t3b(n_max, k_max); break;
            case IdentityId::T4: failure = check_t4(n_max, k_max); break;
            case IdentityId::T5: failure = check_t5(n_max, k_max, x_samples); break;
            case IdentityId::T6: failure = check_t6(n_max, k_max, x_samples); break;
            case IdentityId::T7: failure = check_t7(n_max, k_max, x_samples); break;
            case IdentityId::T8: failure = check_t8(n_max, k_max); break;
            case IdentityId::T9: failure = check_t9(n_max, k_max); break;
            case IdentityId::T10: failure = check_t10(n_max, k_max, x_samples); break;
            case IdentityId::T11: failure = check_t11(n_max, k_max, x_samples); break;
            case IdentityId::T12: failure = check_t12(n_max, k_max, x_samples); break;
            case IdentityId::E36: failure = check_e36(n_max, k_max, x_samples); break;
            case IdentityId::E4: failure = check_e4(n_max); break;
            case IdentityId::E9: failure = check_e9(n_max); break;
            case IdentityId::E12: failure = check_e12(n_max, k_max); break;
            case IdentityId::E19: failure = check_e19(n_max, k_max, x_samples); break;
        }
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
        VerificationReport report;
        report.id = id;
        report.grid = GridSpec{n_max, k_max, x_samples};
        report.passed = !failure.has_value();
        report.first_failure = std::move(failure);
        report.elapsed = elapsed;
        return report;
    }

    /// Runs every identity; reports are merged in catalogue order no matter
    /// how many worker threads the jobs hint requests.
    std::vector<VerificationReport> check_all(int n_max, int k_max,
                                              const std::vector<Rational>& x_samples,
                                              int jobs = 1) const {
        std::vector<VerificationReport> reports(kAllIdentities.size());
        if (jobs <= 1) {
            for (std::size_t i = 0; i < kAllIdentities.size(); ++i) {
                reports[i] = check_identity(kAllIdentities[i], n_max, k_max, x_samples);
            }
            return reports;
        }
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= kAllIdentities.size()) return;
                reports[i] = check_identity(kAllIdentities[i], n_max, k_max, x_samples);
            }
        };
        std::vector<std::future<void>> futures;
        const int workers = std::min<int>(jobs, static_cast<int>(kAllIdentities.size()));
        futures.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            futures.push_back(std::async(std::launch::async, worker));
        }
        for (auto& f : futures) {
            f.get();
        }
        return reports;
    }

private:
    using Failure = std::optional<Counterexample>;
    using Index = std::pair<std::string, std::string>;

    static int capacity_bound(int n_max, int k_max) {
        if (n_max < 0 || k_max < 1) {
            throw std::invalid_argument("IdentityChecker: need n_max >= 0 and k_max >= 1");
        }
        return n_max + k_max + 2;
    }

    static Failure fail(std::vector<Index> indices, std::string lhs, std::string rhs) {
        return Counterexample{std::move(indices), std::move(lhs), std::move(rhs)};
    }

    static Failure compare(const Rational& lhs, const Rational& rhs, std::vector<Index> indices) {
        if (lhs == rhs) return std::nullopt;
        return fail(std::move(indices), to_string(lhs), to_string(rhs));
    }

    /// Coefficientwise equality, plus a redundant evaluation smoke check at
    /// the sampled points.
    static Failure compare_poly(const RationalPolynomial& lhs, const RationalPolynomial& rhs,
                                const std::vector<Rational>& x_samples, std::vector<Index> indices) {
        if (lhs != rhs) {
            return fail(std::move(indices), to_string(lhs), to_string(rhs));
        }
        for (const Rational& x : x_samples) {
            if (lhs(x) != rhs(x)) {
                indices.emplace_back("x", to_string(x));
                return fail(std::move(indices), to_string(lhs(x)), to_string(rhs(x)));
            }
        }
        return std::nullopt;
    }

    static RationalPolynomial negate_x(const RationalPolynomial& p) {
        return p.substitute_affine(Rational(0), Rational(-1));
    }

    const RationalPolynomial& d1_poly(int n, int k) const {
        return d1_polys_[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
    }

    const RationalPolynomial& d2_poly(int n, int k) const {
        return d2_polys_[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
    }

    /// Generating-function route for D_n^(k)(x): binomial convolution of the
    /// cached series coefficients with falling-factorial polynomials.
    RationalPolynomial d1_poly_gf(int n, int k) const {
        RationalPolynomial p;
        for (int m = 0; m <= n; ++m) {
            const Rational weight = Rational(binomial(BigInt(n), m)) *
                                    d1_gf_[static_cast<std::size_t>(k)].egf_coefficient(n - m);
            p += weight * falling_polys_[static_cast<std::size_t>(m)];
        }
        return p;
    }

    Failure check_t1(int n_max, int k_max) const {
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 1; k <= k_max; ++k) {
                const Rational lhs = d1_gf_[static_cast<std::size_t>(k)].egf_coefficient(n);
                const Rational rhs = daehee1_number_closed(stirling_, n, k);
                if (auto f = compare(lhs, rhs, {{"n", std::to_string(n)}, {"k", std::to_string(k)}})) {
                    return f;
                }
            }
        }
        return std::nullopt;
    }

    Failure check_c2(int n_max, int k_max) const {
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 1; k <= k_max; ++k) {
                const Rational lhs = daehee1_number_closed(stirling_, n, k);
                const Rational rhs = bernoulli_.polynomial_at(n, n + k + 1, Rational(1));
                if (auto f = compare(lhs, rhs, {{"n", std::to_string(n)}, {"k", std::to_string(k)}})) {
                    return f;
                }
            }
        }
        return std::nullopt;
    }

    Failure check_t3a(int n_max, int k_max) const {
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 1; k <= k_max; ++k) {
                const Rational lhs = daehee1_number_multinomial(n, k);
                const Rational rhs = daehee1_number_closed(stirling_, n, k);
                if (auto f = compare(lhs, rhs, {{"n", std::to_string(n)}, {"k", std::to_string(k)}})) {
                    return f;
                }
            }
        }
        return std::nullopt;
    }

    Failure check_t3b(int n_max, int k_max) const {
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 1; k <= k_max; ++k) {
                const Rational lhs = daehee1_number_stirling_bernoulli(stirling_, bernoulli_, n, k);
                const Rational rhs = daehee1_number_closed(stirling_, n, k);
                if (auto f = compare(lhs, rhs, {{"n", std::to_string(n)}, {"k", std::to_string(k)}})) {
                    return f;
                }
            }
        }
        return std::nullopt;
    }

    Failure check_t4(int n_max, int k_max) const {
        for (int m = 0; m <= n_max; ++m) {
            for (int k = 1; k <= k_max; ++k) {
                const Rational lhs = bernoulli_.number(m, k);
                Rational rhs(0);
                for (int n = 0; n <= m; ++n) {
                    rhs += daehee1_number_closed(stirling_, n, k) * Rational(stirling_.s2(m, n));
                }
                if (auto f = compare(lhs, rhs, {{"m", std::to_string(m)}, {"k", std::to_string(k)}})) {
                    return f;
                }
            }
        }
        return std::nullopt;
    }

    Failure check_t5(int n_max, int k_max, const std::vector<Rational>& x_samples) const {
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 1; k <= k_max; ++k) {
                if (auto f = compare_poly(d1_poly_gf(n, k), d1_poly(n, k), x_samples,
                                          {{"n", std::to_string(n)}, {"k", std::to_string(k)}})) {
                    return f;
                }
            }
        }
        return std::nullopt;
    }

    Failure check_t6(int n_max, int k_max, const std::vector<Rational>& x_samples) const {
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 1; k <= k_max; ++k) {
                const RationalPolynomial rhs =
                    bernoulli_.polynomial(n, n + k + 1).substitute_affine(Rational(1), Rational(1));
                if (auto f = compare_poly(d1_poly(n, k), rhs, x_samples,
                                          {{"n", std::to_string(n)}, {"k", std::to_string(k)}})) {
                    return f;
                }
            }
        }
        return std::nullopt;
    }

    Failure check_t7(int n_max, int k_max, const std::vector<Rational>& x_samples) const {
        for (int m = 0; m <= n_max; ++m) {
            for (int k = 1; k <= k_max; ++k) {
                RationalPolynomial rhs;
                for (int n = 0; n <= m; ++n) {
                    rhs += Rational(stirling_.s2(m, n)) * d1_poly(n, k);
                }
                if (auto f = compare_poly(bernoulli_.polynomial(m, k), rhs, x_samples,
                                          {{"m", std::to_string(m)}, {"k", std::to_string(k)}})) {
                    return f;
                }
            }
        }
        return std::nullopt;
    }

    Failure check_t8(int n_max, int k_max) const {
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 1; k <= k_max; ++k) {
                const Rational lhs = d2_gf_[static_cast<std::size_t>(k)].egf_coefficient(n);
                const Rational rhs = daehee2_number(stirling_, bernoulli_, n, k);
                if (auto f = compare(lhs, rhs, {{"n", std::to_string(n)}, {"k", std::to_string(k)}})) {
                    return f;
                }
            }
        }
        return std::nullopt;
    }

    Failure check_t9(int n_max, int k_max) const {
        for (int m = 0; m <= n_max; ++m) {
            for (int k = 1; k <= k_max; ++k) {
                const Rational lhs = bernoulli_.number(m, k);
                Rational rhs(0);
                for (int n = 0; n <= m; ++n) {
                    Rational term = daehee2_number(stirling_, bernoulli_, n, k) * Rational(stirling_.s2(m, n));
                    if ((m - n) % 2 == 1) term = -term;
                    rhs += term;
                }
                if (auto f = compare(lhs, rhs, {{"m", std::to_string(m)}, {"k", std::to_string(k)}})) {
                    return f;
                }
            }
        }
        return std::nullopt;
    }

    Failure check_t10(int n_max, int k_max, const std::vector<Rational>& x_samples) const {
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 1; k <= k_max; ++k) {
                const RationalPolynomial lhs = d2_poly(n, k) * Rational(n % 2 == 0 ? 1 : -1);
                const RationalPolynomial rhs =
                    bernoulli_.polynomial(n, n + k + 1).substitute_affine(Rational(k + 1), Rational(1));
                if (auto f = compare_poly(lhs, rhs, x_samples,
                                          {{"n", std::to_string(n)}, {"k", std::to_string(k)}})) {
                    return f;
                }
            }
        }
        return std::nullopt;
    }

    Failure check_t11(int n_max, int k_max, const std::vector<Rational>& x_samples) const {
        for (int m = 0; m <= n_max; ++m) {
            for (int k = 1; k <= k_max; ++k) {
                const RationalPolynomial lhs = negate_x(bernoulli_.polynomial(m, k));
                RationalPolynomial rhs;
                for (int n = 0; n <= m; ++n) {
                    RationalPolynomial term = d2_poly(n, k) * Rational(stirling_.s2(m, n));
                    if ((m - n) % 2 == 1) term = -term;
                    rhs += term;
                }
                if (auto f = compare_poly(lhs, rhs, x_samples,
                                          {{"m", std::to_string(m)}, {"k", std::to_string(k)}})) {
                    return f;
                }
            }
        }
        return std::nullopt;
    }

    /// T12 and E36 share their shape: a 1/n!-scaled polynomial on the left,
    /// a sum over m weighted by C(n-1,n-m)/m! on the right. The sum is
    /// extended to m = 0 via the generalized binomial (the m = 0 term
    /// vanishes for n >= 1), and for n >= 1 the classical m >= 1 form is
    /// asserted as well.
    template <typename TermFn>
    Failure check_reflection(int n_max, int k_max, const std::vector<Rational>& x_samples,
                             const RationalPolynomial& (IdentityChecker::*lhs_poly)(int, int) const,
                             bool alternate_sign, TermFn term_poly) const {
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 1; k <= k_max; ++k) {
                Rational scale = make_rational(1, factorial(n));
                if (alternate_sign && n % 2 == 1) scale = -scale;
                const RationalPolynomial lhs = (this->*lhs_poly)(n, k) * scale;
                RationalPolynomial extended;
                RationalPolynomial from_one;
                for (int m = 0; m <= n; ++m) {
                    const Rational weight =
                        Rational(binomial(BigInt(n - 1), n - m)) / Rational(factorial(m));
                    const RationalPolynomial term = weight * term_poly(m, k);
                    extended += term;
                    if (m >= 1) from_one += term;
                }
                if (auto f = compare_poly(lhs, extended, x_samples,
                                          {{"n", std::to_string(n)}, {"k", std::to_string(k)}})) {
                    return f;
                }
                if (n >= 1) {
                    if (auto f = compare_poly(lhs, from_one, x_samples,
                                              {{"n", std::to_string(n)}, {"k", std::to_string(k)}})) {
                        return f;
                    }
                }
            }
        }
        return std::nullopt;
    }

    Failure check_t12(int n_max, int k_max, const std::vector<Rational>& x_samples) const {
        return check_reflection(n_max, k_max, x_samples, &IdentityChecker::d1_poly, true,
                                [this](int m, int k) {
                                    RationalPolynomial p = negate_x(d2_poly(m, k));
                                    if (m % 2 == 1) p = -p;
                                    return p;
                                });
    }

    Failure check_e36(int n_max, int k_max, const std::vector<Rational>& x_samples) const {
        return check_reflection(n_max, k_max, x_samples, &IdentityChecker::d2_poly, false,
                                [this](int m, int k) { return negate_x(d1_poly(m, k)); });
    }

    Failure check_e4(int n_max) const {
        for (int j = 0; j <= n_max; ++j) {
            const auto triple = difference_identity_check(RationalPolynomial::monomial(j));
            const Rational lhs = triple.integral_shifted - triple.integral;
            if (auto f = compare(lhs, triple.derivative_at_zero, {{"j", std::to_string(j)}})) {
                return f;
            }
        }
        return std::nullopt;
    }

    Failure check_e9(int n_max) const {
        for (int n = 0; n <= n_max; ++n) {
            const Rational lhs = volkenborn_exact(falling_polys_[static_cast<std::size_t>(n)]);
            const Rational rhs = d1_gf_[1].egf_coefficient(n);
            if (auto f = compare(lhs, rhs, {{"n", std::to_string(n)}})) {
                return f;
            }
        }
        return std::nullopt;
    }

    Failure check_e12(int n_max, int k_max) const {
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 1; k <= k_max; ++k) {
                const Rational lhs = d1_gf_[static_cast<std::size_t>(k)].egf_coefficient(n);
                const Rational rhs = bernoulli_.polynomial_at(n, n + k + 1, Rational(1));
                if (auto f = compare(lhs, rhs, {{"n", std::to_string(n)}, {"k", std::to_string(k)}})) {
                    return f;
                }
            }
        }
        return std::nullopt;
    }

    Failure check_e19(int n_max, int k_max, const std::vector<Rational>& x_samples) const {
        for (int k = 1; k <= k_max; ++k) {
            for (const Rational& x : x_samples) {
                const TruncatedSeries shifted =
                    d1_gf_[static_cast<std::size_t>(k)] * TruncatedSeries::binomial_power(x, order_);
                for (int n = 0; n <= n_max; ++n) {
                    const Rational lhs = shifted.egf_coefficient(n);
                    const Rational rhs = d1_poly(n, k)(x);
                    if (auto f = compare(lhs, rhs,
                                         {{"n", std::to_string(n)},
                                          {"k", std::to_string(k)},
                                          {"x", to_string(x)}})) {
                        return f;
                    }
                }
            }
        }
        return std::nullopt;
    }

    int n_max_;
    int k_max_;
    int order_;
    StirlingCache stirling_;
    BernoulliCalculator bernoulli_;
    std::vector<TruncatedSeries> d1_gf_;
    std::vector<TruncatedSeries> d2_gf_;
    std::vector<RationalPolynomial> falling_polys_;
    std::vector<std::vector<RationalPolynomial>> d1_polys_;
    std::vector<std::vector<RationalPolynomial>> d2_polys_;
};

}  // namespace daehee
