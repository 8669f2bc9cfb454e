#pragma once

#include <stdexcept>
#include <vector>

#include "eskit/bigint.hpp"

namespace eskit {

// C(n, k) by the multiplicative formula; each intermediate division is exact.
inline BigInt binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt c(1);
    for (long long i = 1; i <= k; ++i) {
        c = c * BigInt(n - k + i) / BigInt(i);
    }
    return c;
}

// Row n of Pascal's triangle: C(n,0) .. C(n,n).
inline std::vector<BigInt> binomial_row(int n) {
    if (n < 0) throw std::invalid_argument("binomial_row: negative n");
    std::vector<BigInt> row;
    row.reserve(static_cast<std::size_t>(n) + 1);
    row.emplace_back(1);
    for (int k = 1; k <= n; ++k) {
        row.push_back(row.back() * BigInt(n - k + 1) / BigInt(k));
    }
    return row;
}

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative n");
    BigInt f(1);
    for (int i = 2; i <= n; ++i) f *= BigInt(i);
    return f;
}

}  // namespace eskit
