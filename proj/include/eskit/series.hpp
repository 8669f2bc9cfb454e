#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eskit/binomial.hpp"
#include "eskit/polynomial.hpp"
#include "eskit/rational.hpp"

namespace eskit {

// Ring hooks a coefficient type must provide to live inside a Series.
template <typename R>
struct SeriesRing;

template <>
struct SeriesRing<Rational> {
    static Rational one() { return Rational(1); }
    static Rational scale(const Rational& a, const Rational& s) { return a * s; }
    static Rational constant_inverse(const Rational& a) { return a.reciprocal(); }
};

template <>
struct SeriesRing<RatPolynomial> {
    static RatPolynomial one() { return RatPolynomial::constant(Rational(1)); }
    static RatPolynomial scale(const RatPolynomial& a, const Rational& s) { return a * s; }
    // Only a nonzero constant polynomial is invertible in R[x].
    static RatPolynomial constant_inverse(const RatPolynomial& a) {
        if (a.degree() > 0) {
            throw std::domain_error("series: constant term is not an invertible constant");
        }
        return RatPolynomial::constant(a.coeff(0).reciprocal());
    }
};

// Truncated formal power series in t over an exact coefficient ring R.
// Holds exactly order+1 coefficients; all binary operations require equal
// truncation orders, and comparing series of different orders is an error
// rather than a coercion.
template <typename R>
class Series {
public:
    explicit Series(int order) : c_(checked_size(order)) {}

    explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("series: empty coefficient list");
    }

    template <typename F>
    Series(int order, F&& coeff_of) : c_(checked_size(order)) {
        for (int n = 0; n <= order; ++n) c_[static_cast<std::size_t>(n)] = coeff_of(n);
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const R& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
    const std::vector<R>& coefficients() const { return c_; }

    friend Series operator+(const Series& a, const Series& b) {
        require_same_order(a, b, "add");
        std::vector<R> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] + b.c_[i];
        return Series(std::move(r));
    }

    friend Series operator-(const Series& a, const Series& b) {
        require_same_order(a, b, "subtract");
        std::vector<R> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] - b.c_[i];
        return Series(std::move(r));
    }

    Series operator-() const {
        std::vector<R> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = R{} - c_[i];
        return Series(std::move(r));
    }

    // Cauchy product truncated at the common order.
    friend Series operator*(const Series& a, const Series& b) {
        require_same_order(a, b, "multiply");
        std::vector<R> r(a.c_.size());
        for (std::size_t n = 0; n < r.size(); ++n) {
            R acc{};
            for (std::size_t k = 0; k <= n; ++k) acc += a.c_[k] * b.c_[n - k];
            r[n] = std::move(acc);
        }
        return Series(std::move(r));
    }

    friend bool operator==(const Series& a, const Series& b) {
        require_same_order(a, b, "compare");
        return a.c_ == b.c_;
    }

private:
    static std::size_t checked_size(int order) {
        if (order < 0) throw std::invalid_argument("series: negative truncation order");
        return static_cast<std::size_t>(order) + 1;
    }

    static void require_same_order(const Series& a, const Series& b, const char* what) {
        if (a.order() != b.order()) {
            throw std::invalid_argument(std::string("series: cannot ") + what +
                                        " at different truncation orders (" +
                                        std::to_string(a.order()) + " vs " +
                                        std::to_string(b.order()) + ")");
        }
    }

    std::vector<R> c_;
};

using PowerSeries = Series<Rational>;

template <typename R>
Series<R> scaled(const Series<R>& a, const Rational& s) {
    std::vector<R> r(a.coefficients().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = SeriesRing<R>::scale(a.coeff(static_cast<int>(i)), s);
    return Series<R>(std::move(r));
}

template <typename R>
Series<R> truncated(const Series<R>& a, int new_order) {
    if (new_order < 0 || new_order > a.order()) {
        throw std::invalid_argument("series: bad truncation order");
    }
    std::vector<R> r(a.coefficients().begin(),
                     a.coefficients().begin() + new_order + 1);
    return Series<R>(std::move(r));
}

// d/dt; drops the order by one. An order-0 input yields the order-0 zero.
template <typename R>
Series<R> derivative(const Series<R>& a) {
    if (a.order() == 0) return Series<R>(0);
    std::vector<R> r(static_cast<std::size_t>(a.order()));
    for (int i = 1; i <= a.order(); ++i) {
        r[static_cast<std::size_t>(i - 1)] =
            SeriesRing<R>::scale(a.coeff(i), Rational(i));
    }
    return Series<R>(std::move(r));
}

// outer(inner(t)) by Horner's scheme; inner must vanish at t = 0, otherwise
// the truncated composition is ill-defined.
template <typename R>
Series<R> compose(const Series<R>& outer, const Series<R>& inner) {
    if (outer.order() != inner.order()) {
        throw std::invalid_argument("series: compose needs equal truncation orders");
    }
    if (!(inner.coeff(0) == R{})) {
        throw std::invalid_argument("series: compose needs a zero inner constant term");
    }
    const int m = outer.order();
    std::vector<R> acc_coeffs(static_cast<std::size_t>(m) + 1);
    acc_coeffs[0] = outer.coeff(m);
    Series<R> acc(std::move(acc_coeffs));
    for (int i = m - 1; i >= 0; --i) {
        acc = acc * inner;
        std::vector<R> step(acc.coefficients());
        step[0] += outer.coeff(i);
        acc = Series<R>(std::move(step));
    }
    return acc;
}

// exp(a) for a with zero constant term, via the E' = a'E recurrence:
// n*e_n = sum_{k=1..n} k*a_k*e_{n-k}.
template <typename R>
Series<R> exp(const Series<R>& a) {
    if (!(a.coeff(0) == R{})) {
        throw std::invalid_argument("series: exp needs a zero constant term");
    }
    std::vector<R> e(a.coefficients().size());
    e[0] = SeriesRing<R>::one();
    for (int n = 1; n <= a.order(); ++n) {
        R acc{};
        for (int k = 1; k <= n; ++k) {
            acc += SeriesRing<R>::scale(a.coeff(k), Rational(k)) *
                   e[static_cast<std::size_t>(n - k)];
        }
        e[static_cast<std::size_t>(n)] = SeriesRing<R>::scale(acc, Rational(1, n));
    }
    return Series<R>(std::move(e));
}

// Multiplicative inverse: b_0 = a_0^{-1}, b_n = -b_0 * sum_{k=1..n} a_k b_{n-k}.
template <typename R>
Series<R> reciprocal(const Series<R>& a) {
    const R inv0 = SeriesRing<R>::constant_inverse(a.coeff(0));
    std::vector<R> b(a.coefficients().size());
    b[0] = inv0;
    for (int n = 1; n <= a.order(); ++n) {
        R acc{};
        for (int k = 1; k <= n; ++k) {
            acc += a.coeff(k) * b[static_cast<std::size_t>(n - k)];
        }
        b[static_cast<std::size_t>(n)] = R{} - inv0 * acc;
    }
    return Series<R>(std::move(b));
}

inline PowerSeries constant_series(int order, const Rational& value) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = value;
    return PowerSeries(std::move(c));
}

// exp(t): coefficients 1/n!.
inline PowerSeries exp_t_series(int order) {
    return PowerSeries(order, [](int n) { return Rational(BigInt(1), factorial(n)); });
}

// 1/(1-t): all-ones coefficients.
inline PowerSeries geometric_series(int order) {
    return PowerSeries(order, [](int) { return Rational(1); });
}

// n! * [t^n], the exponential-generating-function reading of coefficient n.
inline Rational egf_coefficient(const PowerSeries& a, int n) {
    return a.coeff(n) * Rational(factorial(n));
}

// Truncated series sum p_n(x) t^n / n! with the 1/n! implicit: slot n stores
// the polynomial p_n itself, keeping every slot inside the integer ring.
class PolySeries {
public:
    explicit PolySeries(int order) {
        if (order < 0) throw std::invalid_argument("poly series: negative truncation order");
        slots_.resize(static_cast<std::size_t>(order) + 1);
    }

    explicit PolySeries(std::vector<IntPolynomial> slots) : slots_(std::move(slots)) {
        if (slots_.empty()) throw std::invalid_argument("poly series: empty slot list");
    }

    int order() const { return static_cast<int>(slots_.size()) - 1; }
    const IntPolynomial& slot(int n) const { return slots_.at(static_cast<std::size_t>(n)); }
    const std::vector<IntPolynomial>& slots() const { return slots_; }

    friend bool operator==(const PolySeries& a, const PolySeries& b) {
        if (a.order() != b.order()) {
            throw std::invalid_argument("poly series: cannot compare at different truncation orders");
        }
        return a.slots_ == b.slots_;
    }

private:
    std::vector<IntPolynomial> slots_;
};

// Rescales a polynomial-coefficient series to its n!-scaled PolySeries form;
// every n! * coeff_n must come out integral.
inline PolySeries factorial_scaled(const Series<RatPolynomial>& a) {
    std::vector<IntPolynomial> slots;
    slots.reserve(a.coefficients().size());
    for (int n = 0; n <= a.order(); ++n) {
        slots.push_back(to_integer_polynomial(a.coeff(n) * Rational(factorial(n))));
    }
    return PolySeries(std::move(slots));
}

}  // namespace eskit
