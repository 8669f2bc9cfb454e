#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eskit/euler_seidel.hpp"
#include "eskit/sequences.hpp"
#include "eskit/series.hpp"

namespace eskit {

// Outcome of one named generating-function check at a truncation order.
struct SeriesCheckResult {
    std::string name;
    int order = 0;
    bool passed = false;
    std::optional<int> first_mismatch;  // coefficient index, when failed
};

// Euler's duality on ordinary generating functions:
// abar(t) = 1/(1-t) * a(t/(1-t)), so [t^n] abar = sum_k C(n,k) [t^k] a.
inline PowerSeries ogf_dual(const PowerSeries& a) {
    const int order = a.order();
    // t/(1-t) = t + t^2 + ...
    PowerSeries inner(order, [](int n) { return Rational(n >= 1 ? 1 : 0); });
    return geometric_series(order) * compose(a, inner);
}

// Seidel's duality on exponential generating functions: Abar(t) = e^t A(t).
inline PowerSeries egf_dual(const PowerSeries& a) {
    return exp_t_series(a.order()) * a;
}

// The n!-scaled reading of multiplying by e^t: slot n of the result is
// sum_k C(n,k) * slot k.
inline PolySeries egf_dual_poly(const PolySeries& a) {
    std::vector<IntPolynomial> slots;
    slots.reserve(a.slots().size());
    for (int n = 0; n <= a.order(); ++n) {
        const auto row = binomial_row(n);
        IntPolynomial acc;
        for (int k = 0; k <= n; ++k) {
            acc += a.slot(k) * row[static_cast<std::size_t>(k)];
        }
        slots.push_back(std::move(acc));
    }
    return PolySeries(std::move(slots));
}

namespace detail {

// e^t - 1 over Q: coefficients 1/n! with the constant removed.
inline PowerSeries exp_t_minus_one(int order) {
    return PowerSeries(order, [](int n) {
        return n == 0 ? Rational(0) : Rational(BigInt(1), factorial(n));
    });
}

// x * (e^t - 1) over Q[x].
inline Series<RatPolynomial> x_exp_t_minus_one(int order) {
    return Series<RatPolynomial>(order, [](int n) {
        if (n == 0) return RatPolynomial{};
        return RatPolynomial{Rational(0), Rational(BigInt(1), factorial(n))};
    });
}

inline Series<RatPolynomial> exp_t_ratpoly(int order) {
    return Series<RatPolynomial>(order, [](int n) {
        return RatPolynomial::constant(Rational(BigInt(1), factorial(n)));
    });
}

inline Series<RatPolynomial> one_ratpoly(int order) {
    return Series<RatPolynomial>(order, [](int n) {
        return n == 0 ? SeriesRing<RatPolynomial>::one() : RatPolynomial{};
    });
}

template <typename R>
Series<R> power(const Series<R>& base, int exponent) {
    Series<R> acc(base.order(), [](int n) {
        return n == 0 ? SeriesRing<R>::one() : R{};
    });
    for (int i = 0; i < exponent; ++i) acc = acc * base;
    return acc;
}

inline constexpr int kStirlingColumnLimit = 6;  // m range for S5 / S17pp

// S5: n! [t^n] of (e^t-1)^m / m! is S(n,m).
inline SeriesCheckResult check_s5(int order) {
    SeriesCheckResult res{"S5", order, true, std::nullopt};
    const PowerSeries base = exp_t_minus_one(order);
    for (int m = 0; m <= kStirlingColumnLimit && res.passed; ++m) {
        const PowerSeries a =
            scaled(power(base, m), Rational(BigInt(1), factorial(m)));
        for (int n = 0; n <= order; ++n) {
            if (egf_coefficient(a, n) != Rational(stirling2(n, m))) {
                res.passed = false;
                res.first_mismatch = n;
                break;
            }
        }
    }
    return res;
}

// S7: n! [t^n] of exp(x(e^t-1)) is phi_n(x).
inline SeriesCheckResult check_s7(int order) {
    SeriesCheckResult res{"S7", order, true, std::nullopt};
    const PolySeries a = factorial_scaled(exp(x_exp_t_minus_one(order)));
    for (int n = 0; n <= order; ++n) {
        if (!(a.slot(n) == bell_polynomial(n))) {
            res.passed = false;
            res.first_mismatch = n;
            break;
        }
    }
    return res;
}

// S15: n! [t^n] of 1/(1 - x(e^t-1)) is F_n(x).
inline SeriesCheckResult check_s15(int order) {
    SeriesCheckResult res{"S15", order, true, std::nullopt};
    const PolySeries a =
        factorial_scaled(reciprocal(one_ratpoly(order) - x_exp_t_minus_one(order)));
    for (int n = 0; n <= order; ++n) {
        if (!(a.slot(n) == fubini_polynomial(n))) {
            res.passed = false;
            res.first_mismatch = n;
            break;
        }
    }
    return res;
}

// S17pp: e^t (e^t-1)^m / m! equals d/dt (e^t-1)^{m+1} / (m+1)!, and its
// n!-scaled coefficients are S(n+1, m+1).
inline SeriesCheckResult check_s17pp(int order) {
    SeriesCheckResult res{"S17pp", order, true, std::nullopt};
    const PowerSeries base = exp_t_minus_one(order);
    const PowerSeries et = exp_t_series(order);
    for (int m = 0; m <= kStirlingColumnLimit && res.passed; ++m) {
        const PowerSeries lhs =
            et * scaled(power(base, m), Rational(BigInt(1), factorial(m)));
        const PowerSeries rhs = derivative(
            scaled(power(base, m + 1), Rational(BigInt(1), factorial(m + 1))));
        for (int n = 0; n < order && res.passed; ++n) {
            if (lhs.coeff(n) != rhs.coeff(n)) {
                res.passed = false;
                res.first_mismatch = n;
            }
        }
        for (int n = 0; n <= order && res.passed; ++n) {
            if (egf_coefficient(lhs, n) != Rational(stirling2(n + 1, m + 1))) {
                res.passed = false;
                res.first_mismatch = n;
            }
        }
    }
    return res;
}

// S20p: e^t e^{e^t-1} = d/dt e^{e^t-1}, with n!-scaled coefficients phi_{n+1}.
inline SeriesCheckResult check_s20p(int order) {
    SeriesCheckResult res{"S20p", order, true, std::nullopt};
    const PowerSeries bell_egf = exp(exp_t_minus_one(order));
    const PowerSeries lhs = exp_t_series(order) * bell_egf;
    const PowerSeries rhs = derivative(bell_egf);
    for (int n = 0; n < order && res.passed; ++n) {
        if (lhs.coeff(n) != rhs.coeff(n)) {
            res.passed = false;
            res.first_mismatch = n;
        }
    }
    for (int n = 0; n <= order && res.passed; ++n) {
        if (egf_coefficient(lhs, n) != Rational(bell_number(n + 1))) {
            res.passed = false;
            res.first_mismatch = n;
        }
    }
    return res;
}

// S22p: x * (n! [t^n] of e^t e^{x(e^t-1)}) is phi_{n+1}(x).
inline SeriesCheckResult check_s22p(int order) {
    SeriesCheckResult res{"S22p", order, true, std::nullopt};
    const PolySeries a = factorial_scaled(exp_t_ratpoly(order) *
                                          exp(x_exp_t_minus_one(order)));
    for (int n = 0; n <= order; ++n) {
        if (!(shifted_up(a.slot(n), 1) == bell_polynomial(n + 1))) {
            res.passed = false;
            res.first_mismatch = n;
            break;
        }
    }
    return res;
}

// S28p: the slots of e^t / (1 - x(e^t-1)) satisfy
// x a_0^n = F_{n+1}(x) - x sum_{k=1..n} C(n,k-1) F_k(x).
inline SeriesCheckResult check_s28p(int order) {
    SeriesCheckResult res{"S28p", order, true, std::nullopt};
    const PolySeries a = factorial_scaled(
        exp_t_ratpoly(order) *
        reciprocal(one_ratpoly(order) - x_exp_t_minus_one(order)));
    for (int n = 0; n <= order; ++n) {
        const auto row = binomial_row(n);
        IntPolynomial sum;
        for (int k = 1; k <= n; ++k) {
            sum += fubini_polynomial(k) * row[static_cast<std::size_t>(k - 1)];
        }
        const IntPolynomial lhs = shifted_up(a.slot(n), 1);
        const IntPolynomial rhs = fubini_polynomial(n + 1) - shifted_up(sum, 1);
        if (!(lhs == rhs)) {
            res.passed = false;
            res.first_mismatch = n;
            break;
        }
    }
    return res;
}

// SEuler: [t^n] ogf_dual(a) = sum_k C(n,k) [t^k] a on all-ones, Bell and
// Fubini initial sequences, against the explicit-sum transform.
inline SeriesCheckResult check_seuler(int order) {
    SeriesCheckResult res{"SEuler", order, true, std::nullopt};
    const std::size_t len = static_cast<std::size_t>(order) + 1;
    std::vector<std::vector<BigInt>> sequences;
    sequences.emplace_back(len, BigInt(1));
    std::vector<BigInt> bell, fubini;
    for (int n = 0; n <= order; ++n) {
        bell.push_back(bell_number(n));
        fubini.push_back(fubini_number(n));
    }
    sequences.push_back(std::move(bell));
    sequences.push_back(std::move(fubini));

    for (const auto& seq : sequences) {
        PowerSeries a(order, [&](int n) { return Rational(seq[static_cast<std::size_t>(n)]); });
        const PowerSeries abar = ogf_dual(a);
        const std::vector<BigInt> expected = binomial_transform(seq);
        for (int n = 0; n <= order; ++n) {
            if (abar.coeff(n) != Rational(expected[static_cast<std::size_t>(n)])) {
                res.passed = false;
                res.first_mismatch = n;
                return res;
            }
        }
    }
    return res;
}

}  // namespace detail

// Runs every named generating-function check at the given truncation order.
// Registry order is fixed; orders below 4 degenerate and are rejected.
inline std::vector<SeriesCheckResult> run_series_checks(int order) {
    if (order < 4) {
        throw std::invalid_argument("series checks: order must be at least 4");
    }
    std::vector<SeriesCheckResult> results;
    results.push_back(detail::check_s5(order));
    results.push_back(detail::check_s7(order));
    results.push_back(detail::check_s15(order));
    results.push_back(detail::check_s17pp(order));
    results.push_back(detail::check_s20p(order));
    results.push_back(detail::check_s22p(order));
    results.push_back(detail::check_s28p(order));
    results.push_back(detail::check_seuler(order));
    return results;
}

}  // namespace eskit
