#include <doctest.h>

#include <vector>

#include "eskit/euler_seidel.hpp"
#include "eskit/sequences.hpp"
#include "property_suites.hpp"
#include "test_util.hpp"

using eskit::BigInt;
using eskit::ESMatrix;
using eskit::IntPolynomial;
using eskit::testutil::ints;
using eskit::testutil::ipoly;

TEST_CASE("bell matrix reproduces the displayed triangle") {
    const ESMatrix<BigInt> m(ints({1, 1, 2, 5, 15, 52}));
    REQUIRE(m.size() == 6);

    // displayed prefixes of each row
    const std::vector<std::vector<BigInt>> expected_prefix = {
        ints({1, 1, 2, 5, 15, 52}),
        ints({2, 3, 7, 20}),
        ints({5, 10, 27}),
        ints({15, 37}),
        ints({52}),
    };
    for (std::size_t k = 0; k < expected_prefix.size(); ++k) {
        REQUIRE(m.row(k).size() >= expected_prefix[k].size());
        for (std::size_t n = 0; n < expected_prefix[k].size(); ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(m.entry(k, n) == expected_prefix[k][n]);
        }
    }
    CHECK(m.row(0).size() == 6);
    CHECK(m.row(5).size() == 1);
    CHECK(satisfies_recurrence(m));
}

TEST_CASE("zero initial sequence gives the zero triangle") {
    const ESMatrix<BigInt> m(std::vector<BigInt>(5));
    for (std::size_t k = 0; k < m.size(); ++k) {
        for (const auto& e : m.row(k)) CHECK(e.is_zero());
    }
}

TEST_CASE("empty initial sequence is rejected") {
    CHECK_THROWS_AS(ESMatrix<BigInt>(std::vector<BigInt>{}), std::invalid_argument);
}

TEST_CASE("fubini matrix interior follows the additive recurrence") {
    const ESMatrix<BigInt> m(ints({1, 1, 3, 13, 75}));
    CHECK(m.row(1) == ints({2, 4, 16, 88}));
    CHECK(m.row(2) == ints({6, 20, 104}));
    CHECK(m.row(3) == ints({26, 124}));
    CHECK(m.row(4) == ints({150}));
    CHECK(m.first_column() == ints({1, 2, 6, 26, 150}));

    // A 3,7,20 interior row cannot sit under 1,1,3,13: it breaks the
    // recurrence at the very first entry (1 + 1 != 3).
    CHECK(m.entry(0, 0) + m.entry(0, 1) != BigInt(3));
}

TEST_CASE("bell polynomial matrix reproduces the displayed triangle") {
    std::vector<IntPolynomial> initial;
    for (int n = 0; n < 4; ++n) initial.push_back(eskit::bell_polynomial(n));
    const ESMatrix<IntPolynomial> m(std::move(initial));

    // row 1: 1+x, 2x+x^2, 2x+4x^2+x^3; row 2: 1+3x+x^2, 4x+5x^2+x^3
    CHECK(m.entry(1, 0) == ipoly({1, 1}));
    CHECK(m.entry(1, 1) == ipoly({0, 2, 1}));
    CHECK(m.entry(1, 2) == ipoly({0, 2, 4, 1}));
    CHECK(m.entry(2, 0) == ipoly({1, 3, 1}));
    CHECK(m.entry(2, 1) == ipoly({0, 4, 5, 1}));

    const std::vector<IntPolynomial> expected = {
        ipoly({1}),
        ipoly({1, 1}),
        ipoly({1, 3, 1}),
        ipoly({1, 7, 6, 1}),
    };
    CHECK(m.first_column() == expected);
    CHECK(satisfies_recurrence(m));
}

TEST_CASE("binomial transform examples") {
    CHECK(eskit::binomial_transform(ints({1, 1, 2, 5, 15})) == ints({1, 2, 5, 15, 52}));
    CHECK(eskit::binomial_transform(ints({1, 1, 3, 13, 75})) == ints({1, 2, 6, 26, 150}));

    // constant c maps to c * 2^n
    const auto doubled = eskit::binomial_transform(ints({3, 3, 3, 3, 3, 3}));
    for (std::size_t n = 0; n < doubled.size(); ++n) {
        CHECK(doubled[n] == BigInt(3) * pow(BigInt(2), static_cast<unsigned long>(n)));
    }
}

TEST_CASE("inverse binomial transform examples") {
    CHECK(eskit::inverse_binomial_transform(ints({1, 2, 5, 15, 52})) == ints({1, 1, 2, 5, 15}));
    CHECK(eskit::inverse_binomial_transform(ints({1, 2, 6, 26, 150})) == ints({1, 1, 3, 13, 75}));
}

TEST_CASE("transforms work on polynomial entries") {
    std::vector<IntPolynomial> phi;
    for (int n = 0; n < 6; ++n) phi.push_back(eskit::bell_polynomial(n));
    const ESMatrix<IntPolynomial> m{std::vector<IntPolynomial>(phi)};
    CHECK(m.first_column() == eskit::binomial_transform(phi));
    CHECK(eskit::inverse_binomial_transform(eskit::binomial_transform(phi)) == phi);
}

TEST_CASE("evaluating the polynomial matrix at x=1 gives the number matrix") {
    std::vector<IntPolynomial> phi;
    std::vector<BigInt> bell;
    for (int n = 0; n < 8; ++n) {
        phi.push_back(eskit::bell_polynomial(n));
        bell.push_back(eskit::bell_number(n));
    }
    const ESMatrix<IntPolynomial> pm{std::move(phi)};
    const ESMatrix<BigInt> nm{std::move(bell)};
    for (std::size_t k = 0; k < pm.size(); ++k) {
        for (std::size_t n = 0; n < pm.row(k).size(); ++n) {
            CHECK(pm.entry(k, n)(BigInt(1)) == nm.entry(k, n));
        }
    }
}

TEST_CASE("property: duality between first column and binomial transform") {
    const auto out = eskit::props::matrix_duality(200, 105);
    CHECK(out.cases == 200);
    CHECK(out.failures == 0);
}

TEST_CASE("property: transform round-trips both ways") {
    const auto out = eskit::props::transform_round_trip(200, 106);
    CHECK(out.cases == 200);
    CHECK(out.failures == 0);
}
