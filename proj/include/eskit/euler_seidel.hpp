#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eskit/bigint.hpp"
#include "eskit/binomial.hpp"
#include "eskit/polynomial.hpp"

namespace eskit {

// Entries are restricted to the exact additive types; no rational or
// floating entries.
template <typename E>
concept ExactEntry = std::same_as<E, BigInt> || std::same_as<E, Polynomial<BigInt>>;

// Triangular Euler-Seidel table over a finite initial sequence of length N:
// row 0 is the initial sequence and a_n^k = a_n^{k-1} + a_{n+1}^{k-1}, so
// row k holds N-k entries. Immutable once built.
template <ExactEntry E>
class ESMatrix {
public:
    explicit ESMatrix(std::vector<E> initial) {
        if (initial.empty()) {
            throw std::invalid_argument("euler-seidel: empty initial sequence");
        }
        const std::size_t n = initial.size();
        rows_.reserve(n);
        rows_.push_back(std::move(initial));
        for (std::size_t k = 1; k < n; ++k) {
            const auto& prev = rows_.back();
            std::vector<E> row(prev.size() - 1);
            for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
                row[i] = prev[i] + prev[i + 1];
            }
            rows_.push_back(std::move(row));
        }
    }

    std::size_t size() const { return rows_.size(); }
    const std::vector<E>& row(std::size_t k) const { return rows_.at(k); }
    const E& entry(std::size_t k, std::size_t n) const { return rows_.at(k).at(n); }

    // The sequence a_0^n, one entry per row.
    std::vector<E> first_column() const {
        std::vector<E> col;
        col.reserve(rows_.size());
        for (const auto& r : rows_) col.push_back(r.front());
        return col;
    }

private:
    std::vector<std::vector<E>> rows_;
};

template <ExactEntry E>
ESMatrix<E> build_matrix(std::vector<E> initial) {
    return ESMatrix<E>(std::move(initial));
}

template <ExactEntry E>
std::vector<E> first_column(const ESMatrix<E>& m) {
    return m.first_column();
}

// Re-checks the defining recurrence on every stored interior entry.
template <ExactEntry E>
bool satisfies_recurrence(const ESMatrix<E>& m) {
    for (std::size_t k = 1; k < m.size(); ++k) {
        for (std::size_t n = 0; n < m.row(k).size(); ++n) {
            if (!(m.entry(k, n) == m.entry(k - 1, n) + m.entry(k - 1, n + 1))) return false;
        }
    }
    return true;
}

// b_n = sum_{k<=n} C(n,k) a_k, computed by the explicit sum so that it can
// cross-check a matrix first column built via the recurrence.
template <ExactEntry E>
std::vector<E> binomial_transform(const std::vector<E>& a) {
    std::vector<E> b;
    b.reserve(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        const auto row = binomial_row(static_cast<int>(n));
        E acc{};
        for (std::size_t k = 0; k <= n; ++k) acc = acc + a[k] * row[k];
        b.push_back(std::move(acc));
    }
    return b;
}

// a_n = sum_{k<=n} C(n,k) (-1)^{n-k} b_k; exact inverse of binomial_transform.
template <ExactEntry E>
std::vector<E> inverse_binomial_transform(const std::vector<E>& b) {
    std::vector<E> a;
    a.reserve(b.size());
    for (std::size_t n = 0; n < b.size(); ++n) {
        const auto row = binomial_row(static_cast<int>(n));
        E acc{};
        for (std::size_t k = 0; k <= n; ++k) {
            const E term = b[k] * row[k];
            if ((n - k) % 2 == 0) {
                acc = acc + term;
            } else {
                acc = acc - term;
            }
        }
        a.push_back(std::move(acc));
    }
    return a;
}

}  // namespace eskit
