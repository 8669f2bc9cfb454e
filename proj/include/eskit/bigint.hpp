#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace eskit {

// Arbitrary-precision signed integer, a thin value type over GMP's mpz.
// Every arithmetic operation is exact; there is no overflow at any size.
class BigInt {
public:
    BigInt() : v_(0) {}
    BigInt(int n) : v_(n) {}
    BigInt(long n) : v_(n) {}
    BigInt(long long n) : v_(static_cast<long>(n)) {
        static_assert(sizeof(long) == sizeof(long long), "needs 64-bit long");
    }
    explicit BigInt(mpz_class v) : v_(std::move(v)) {}

    // Parses an optionally signed decimal string.
    explicit BigInt(std::string_view decimal) {
        if (v_.set_str(std::string(decimal), 10) != 0) {
            throw std::invalid_argument("BigInt: not a decimal integer: '" +
                                        std::string(decimal) + "'");
        }
    }

    bool is_zero() const { return mpz_sgn(v_.get_mpz_t()) == 0; }
    bool is_one() const { return mpz_cmp_ui(v_.get_mpz_t(), 1) == 0; }
    bool is_negative() const { return mpz_sgn(v_.get_mpz_t()) < 0; }
    int  sign() const { return mpz_sgn(v_.get_mpz_t()); }
    bool is_even() const { return mpz_even_p(v_.get_mpz_t()) != 0; }

    std::string to_string() const { return v_.get_str(); }

    const mpz_class& raw() const { return v_; }

    BigInt operator-() const { return BigInt(mpz_class(-v_)); }
    BigInt operator+() const { return *this; }

    BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
    BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
    BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
    BigInt& operator/=(const BigInt& o) { *this = *this / o; return *this; }
    BigInt& operator%=(const BigInt& o) { *this = *this % o; return *this; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }

    // Quotient truncated toward zero; remainder carries the dividend's sign.
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        return BigInt(mpz_class(a.v_ / b.v_));
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        return BigInt(mpz_class(a.v_ % b.v_));
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t()) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        const int c = mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return c <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.v_; }

private:
    mpz_class v_;
};

inline BigInt abs(const BigInt& a) { return a.is_negative() ? -a : a; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return BigInt(std::move(g));
}

inline BigInt pow(const BigInt& base, unsigned long exponent) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
    return BigInt(std::move(r));
}

}  // namespace eskit
