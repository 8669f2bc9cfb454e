#include <doctest.h>

#include <vector>

#include "eskit/polynomial.hpp"
#include "property_suites.hpp"
#include "test_util.hpp"

using eskit::BigInt;
using eskit::IntPolynomial;
using eskit::RatPolynomial;
using eskit::Rational;
using eskit::testutil::ipoly;

namespace {

// Oracle: term-by-term schoolbook convolution, written independently of
// Polynomial's own operator*.
IntPolynomial convolve(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return IntPolynomial{};
    std::vector<BigInt> out(p.coefficients().size() + q.coefficients().size() - 1, BigInt(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t a = 0; a <= i; ++a) {
            out[i] += p.coeff(a) * q.coeff(i - a);
        }
    }
    return IntPolynomial(std::move(out));
}

// Oracle: the power rule applied one term at a time.
IntPolynomial power_rule(const IntPolynomial& p) {
    IntPolynomial out;
    for (std::size_t i = 1; i < p.coefficients().size(); ++i) {
        std::vector<BigInt> term(i, BigInt(0));
        term[i - 1] = p.coeff(i) * BigInt(static_cast<long long>(i));
        out += IntPolynomial(std::move(term));
    }
    return out;
}

}  // namespace

TEST_CASE("polynomial representation invariants") {
    CHECK(IntPolynomial{}.is_zero());
    CHECK(IntPolynomial{}.degree() == -1);
    CHECK(ipoly({0, 0}).is_zero());  // trailing zeros trimmed

    const IntPolynomial p = ipoly({1, 2});
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == BigInt(1));
    CHECK(p.coeff(5) == BigInt(0));

    const IntPolynomial x = ipoly({0, 1});
    CHECK((x - x).is_zero());
}

TEST_CASE("polynomial multiplication") {
    const IntPolynomial x = ipoly({0, 1});
    const IntPolynomial x_plus_x2 = ipoly({0, 1, 1});
    CHECK(x * x_plus_x2 == ipoly({0, 0, 1, 1}));

    CHECK((x_plus_x2 * IntPolynomial{}).is_zero());

    const IntPolynomial one_plus_x = ipoly({1, 1});
    const IntPolynomial f4 = ipoly({0, 1, 14, 36, 24});
    CHECK(one_plus_x * f4 == convolve(one_plus_x, f4));
    CHECK(one_plus_x * f4 == convolve(f4, one_plus_x));

    const IntPolynomial q = ipoly({-3, 0, 7});
    CHECK(f4 * q == convolve(f4, q));
    CHECK((f4 * q).degree() == f4.degree() + q.degree());
}

TEST_CASE("polynomial derivative") {
    // phi_2(x) = x + x^2
    CHECK(derivative(ipoly({0, 1, 1})) == ipoly({1, 2}));

    CHECK(derivative(ipoly({9})).is_zero());
    CHECK(derivative(IntPolynomial{}).is_zero());

    const IntPolynomial f4 = ipoly({0, 1, 14, 36, 24});
    CHECK(derivative(f4) == power_rule(f4));
    CHECK(derivative(f4) == ipoly({1, 28, 108, 96}));
}

TEST_CASE("polynomial evaluation") {
    // phi_4(x) = x + 7x^2 + 6x^3 + x^4
    const IntPolynomial phi4 = ipoly({0, 1, 7, 6, 1});
    CHECK(phi4(BigInt(1)) == BigInt(15));
    CHECK(phi4(BigInt(0)) == BigInt(0));

    const IntPolynomial f4 = ipoly({0, 1, 14, 36, 24});
    CHECK(f4(BigInt(1)) == BigInt(75));

    const IntPolynomial c = ipoly({42, -1, 3});
    CHECK(c(BigInt(0)) == BigInt(42));
}

TEST_CASE("polynomial evaluation is multiplicative on random inputs") {
    const auto out = eskit::props::poly_eval_multiplicative(200, 11);
    CHECK(out.cases == 200);
    CHECK(out.failures == 0);
}

TEST_CASE("polynomial scalar multiply and shift") {
    const IntPolynomial p = ipoly({1, 2});
    CHECK(p * BigInt(3) == ipoly({3, 6}));
    CHECK((p * BigInt(0)).is_zero());
    CHECK(shifted_up(p, 2) == ipoly({0, 0, 1, 2}));
    CHECK(shifted_up(IntPolynomial{}, 3).is_zero());
    CHECK_THROWS_AS(shifted_up(p, -1), std::invalid_argument);
}

TEST_CASE("integer/rational polynomial conversions") {
    const IntPolynomial p = ipoly({2, -5});
    CHECK(to_integer_polynomial(to_rational_polynomial(p)) == p);

    const RatPolynomial half = RatPolynomial::constant(Rational(1, 2));
    CHECK_THROWS_AS(to_integer_polynomial(half), std::domain_error);
}
