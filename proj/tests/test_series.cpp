#include <doctest.h>

#include <vector>

#include "eskit/series.hpp"
#include "property_suites.hpp"
#include "test_util.hpp"

using eskit::BigInt;
using eskit::constant_series;
using eskit::exp_t_series;
using eskit::factorial;
using eskit::geometric_series;
using eskit::IntPolynomial;
using eskit::PolySeries;
using eskit::PowerSeries;
using eskit::Rational;
using eskit::testutil::ipoly;

namespace {

// Oracle for composition: accumulate sum a_k * inner^k by repeated series
// multiplication, touching none of compose()'s Horner machinery.
PowerSeries compose_by_powers(const PowerSeries& outer, const PowerSeries& inner) {
    PowerSeries acc = constant_series(outer.order(), outer.coeff(0));
    PowerSeries inner_power = constant_series(inner.order(), Rational(1));
    for (int k = 1; k <= outer.order(); ++k) {
        inner_power = inner_power * inner;
        acc = acc + scaled(inner_power, outer.coeff(k));
    }
    return acc;
}

}  // namespace

TEST_CASE("series shape invariants") {
    const PowerSeries a(4);
    CHECK(a.order() == 4);
    CHECK(a.coefficients().size() == 5);
    CHECK_THROWS_AS(PowerSeries(-1), std::invalid_argument);
    CHECK_THROWS_AS(PowerSeries(std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("series equality at different orders is an error, not a coercion") {
    const PowerSeries a(4), b(5);
    CHECK_THROWS_AS((void)(a == b), std::invalid_argument);
    CHECK_THROWS_AS((void)(a * b), std::invalid_argument);
    CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
    CHECK(a == PowerSeries(4));
}

TEST_CASE("series multiplication") {
    const PowerSeries one = constant_series(6, Rational(1));
    const PowerSeries e = exp_t_series(6);
    CHECK(e * one == e);

    // (1+t)(1-t) = 1 - t^2 at order 4
    PowerSeries p(4, [](int n) { return Rational(n <= 1 ? 1 : 0); });
    PowerSeries q(4, [](int n) { return Rational(n == 0 ? 1 : (n == 1 ? -1 : 0)); });
    const PowerSeries expected(4, [](int n) { return Rational(n == 0 ? 1 : (n == 2 ? -1 : 0)); });
    CHECK(p * q == expected);

    // exp(t)^2 = exp(2t): coefficients 2^n / n!
    const PowerSeries sq = exp_t_series(10) * exp_t_series(10);
    const PowerSeries exp2t(10, [](int n) {
        return Rational(pow(BigInt(2), static_cast<unsigned long>(n)), factorial(n));
    });
    CHECK(sq == exp2t);
}

TEST_CASE("series composition") {
    const PowerSeries t(6, [](int n) { return Rational(n == 1 ? 1 : 0); });
    const PowerSeries inner(6, [](int n) { return Rational(n >= 1 ? 1 : 0); });  // t/(1-t)
    CHECK(compose(t, inner) == inner);

    // 1/(1-u) at u = t/(1-t) gives (1-t)/(1-2t): 1, then 2^{n-1}
    const PowerSeries composed = compose(geometric_series(6), inner);
    const PowerSeries expected_geo(6, [](int n) {
        return n == 0 ? Rational(1)
                      : Rational(pow(BigInt(2), static_cast<unsigned long>(n - 1)));
    });
    CHECK(composed == expected_geo);

    // the missing 1/(1-t) factor is exactly what ogf_dual adds: that product
    // has coefficients 2^n (checked again in the engine tests)
    const PowerSeries doubling(6, [](int n) {
        return Rational(pow(BigInt(2), static_cast<unsigned long>(n)));
    });
    CHECK(geometric_series(6) * composed == doubling);

    CHECK_THROWS_AS(compose(t, geometric_series(6)), std::invalid_argument);  // inner c0 != 0
    CHECK_THROWS_AS(compose(t, PowerSeries(5)), std::invalid_argument);       // order mismatch
}

TEST_CASE("series composition matches the repeated-multiplication oracle") {
    std::mt19937 rng(99);
    for (int i = 0; i < 40; ++i) {
        std::uniform_int_distribution<int> order(1, 10);
        const int n = order(rng);
        const PowerSeries outer = eskit::props::detail::random_series(rng, n, false);
        const PowerSeries inner = eskit::props::detail::random_series(rng, n, true);
        CHECK(compose(outer, inner) == compose_by_powers(outer, inner));
    }
}

TEST_CASE("series exp") {
    CHECK(exp(PowerSeries(5)) == constant_series(5, Rational(1)));

    const PowerSeries t(8, [](int n) { return Rational(n == 1 ? 1 : 0); });
    CHECK(exp(t) == exp_t_series(8));

    // exp(e^t - 1): n! [t^n] are the Bell numbers 1,1,2,5,15,52,203,877,4140
    const PowerSeries em1(8, [](int n) {
        return n == 0 ? Rational(0) : Rational(BigInt(1), factorial(n));
    });
    const PowerSeries bell_egf = exp(em1);
    const std::vector<long long> bell = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (int n = 0; n <= 8; ++n) {
        CHECK(egf_coefficient(bell_egf, n) == Rational(bell[static_cast<std::size_t>(n)]));
    }
    CHECK(bell_egf.coeff(3) == Rational(5, 6));  // phi_3 / 3!

    CHECK_THROWS_AS(exp(constant_series(4, Rational(1))), std::invalid_argument);
}

TEST_CASE("series reciprocal") {
    const PowerSeries one = constant_series(5, Rational(1));
    CHECK(reciprocal(one) == one);

    // 1/(1-t) = all ones
    const PowerSeries one_minus_t(5, [](int n) {
        return Rational(n == 0 ? 1 : (n == 1 ? -1 : 0));
    });
    CHECK(reciprocal(one_minus_t) == geometric_series(5));

    // 1/(2-e^t): n! [t^n] are the Fubini numbers 1,1,3,13,75,541,4683
    const PowerSeries two_minus_exp(6, [](int n) {
        return n == 0 ? Rational(1) : Rational(BigInt(-1), factorial(n));
    });
    const PowerSeries fub = reciprocal(two_minus_exp);
    const std::vector<long long> fubini = {1, 1, 3, 13, 75, 541, 4683};
    for (int n = 0; n <= 6; ++n) {
        CHECK(egf_coefficient(fub, n) == Rational(fubini[static_cast<std::size_t>(n)]));
    }

    CHECK_THROWS_AS(reciprocal(PowerSeries(4)), std::domain_error);  // zero constant term
}

TEST_CASE("series derivative") {
    const PowerSeries e = exp_t_series(6);
    CHECK(derivative(e) == exp_t_series(5));

    CHECK(derivative(constant_series(4, Rational(7))) == PowerSeries(3));
    CHECK(derivative(constant_series(0, Rational(7))) == PowerSeries(0));  // stays order 0

    // d/dt (e^t-1)^2/2! = e^t (e^t-1), checked through series_mul
    const PowerSeries em1(8, [](int n) {
        return n == 0 ? Rational(0) : Rational(BigInt(1), factorial(n));
    });
    const PowerSeries lhs = derivative(scaled(em1 * em1, Rational(1, 2)));
    const PowerSeries rhs = exp_t_series(7) * truncated(em1, 7);
    CHECK(lhs == rhs);
}

TEST_CASE("series truncation") {
    const PowerSeries e = exp_t_series(6);
    CHECK(truncated(e, 3) == exp_t_series(3));
    CHECK_THROWS_AS(truncated(e, 7), std::invalid_argument);
    CHECK_THROWS_AS(truncated(e, -1), std::invalid_argument);
}

TEST_CASE("series property: reciprocal round-trip") {
    const auto out = eskit::props::reciprocal_round_trip(200, 101);
    CHECK(out.cases == 200);
    CHECK(out.failures == 0);
}

TEST_CASE("series property: composition associativity") {
    const auto out = eskit::props::compose_associativity(200, 102);
    CHECK(out.cases == 200);
    CHECK(out.failures == 0);
}

TEST_CASE("series property: exp homomorphism") {
    const auto out = eskit::props::exp_homomorphism(200, 103);
    CHECK(out.cases == 200);
    CHECK(out.failures == 0);
}

TEST_CASE("series property: derivative linearity and Leibniz") {
    const auto out = eskit::props::derivative_linear_leibniz(200, 104);
    CHECK(out.cases == 200);
    CHECK(out.failures == 0);
}

TEST_CASE("poly series slots and factorial rescaling") {
    CHECK_THROWS_AS(PolySeries(-1), std::invalid_argument);
    CHECK_THROWS_AS(PolySeries(std::vector<IntPolynomial>{}), std::invalid_argument);

    const PolySeries zero2(2), zero3(3);
    CHECK_THROWS_AS((void)(zero2 == zero3), std::invalid_argument);

    // slots of exp-style data: n! * (x^n / n!) = x^n
    eskit::Series<eskit::RatPolynomial> s(3, [](int n) {
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
        c[static_cast<std::size_t>(n)] = Rational(BigInt(1), factorial(n));
        return eskit::RatPolynomial(std::move(c));
    });
    const PolySeries scaled_slots = factorial_scaled(s);
    CHECK(scaled_slots.slot(0) == ipoly({1}));
    CHECK(scaled_slots.slot(3) == ipoly({0, 0, 0, 1}));

    // non-integer slot is rejected
    eskit::Series<eskit::RatPolynomial> bad(1, [](int n) {
        return eskit::RatPolynomial::constant(Rational(1, n + 2));
    });
    CHECK_THROWS_AS(factorial_scaled(bad), std::domain_error);
}
