#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eskit/bigint.hpp"
#include "eskit/rational.hpp"

namespace eskit {

// Dense univariate polynomial over an exact coefficient ring T, stored as an
// ascending coefficient array with no trailing zeros. The zero polynomial is
// the empty array; its degree is reported as -1 and never used in arithmetic.
template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // Coefficient of x^i, zero beyond the stored range.
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }

    const std::vector<T>& coefficients() const { return c_; }

    // Horner evaluation.
    T operator()(const T& x) const {
        T acc{};
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * x + c_[i];
        }
        return acc;
    }

    Polynomial operator-() const {
        std::vector<T> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(r));
    }

    // Schoolbook convolution; exact, adequate at this library's scales.
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial{};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Polynomial& p, const T& s) {
        std::vector<T> r(p.c_.size());
        for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = p.c_[i] * s;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const T& s, const Polynomial& p) { return p * s; }

    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T{}) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

// Coefficient i of the result is (i+1) * coeff_{i+1}(p).
template <typename T>
Polynomial<T> derivative(const Polynomial<T>& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return Polynomial<T>{};
    std::vector<T> r(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        r[i - 1] = c[i] * T(static_cast<long long>(i));
    }
    return Polynomial<T>(std::move(r));
}

// Multiplication by x^k.
template <typename T>
Polynomial<T> shifted_up(const Polynomial<T>& p, int k) {
    if (k < 0) throw std::invalid_argument("shifted_up: negative shift");
    if (p.is_zero()) return p;
    std::vector<T> r(p.coefficients().size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        r[i + static_cast<std::size_t>(k)] = p.coefficients()[i];
    }
    return Polynomial<T>(std::move(r));
}

inline RatPolynomial to_rational_polynomial(const IntPolynomial& p) {
    std::vector<Rational> r;
    r.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) r.emplace_back(c);
    return RatPolynomial(std::move(r));
}

// Exact inverse of to_rational_polynomial; rejects fractional coefficients.
inline IntPolynomial to_integer_polynomial(const RatPolynomial& p) {
    std::vector<BigInt> r;
    r.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) r.push_back(c.to_integer());
    return IntPolynomial(std::move(r));
}

}  // namespace eskit
