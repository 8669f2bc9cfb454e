#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eskit/binomial.hpp"
#include "eskit/euler_seidel.hpp"
#include "eskit/polynomial.hpp"
#include "eskit/sequences.hpp"

namespace eskit {

// Where the checks draw their sequence terms from. The default is the real
// generators; tests substitute corrupted terms to prove a fault is caught.
struct SequenceSource {
    std::function<BigInt(int)> bell = [](int n) { return bell_number(n); };
    std::function<BigInt(int)> fubini = [](int n) { return fubini_number(n); };
    std::function<IntPolynomial(int)> bell_poly = [](int n) { return bell_polynomial(n); };
    std::function<IntPolynomial(int)> fubini_poly = [](int n) { return fubini_polynomial(n); };
    std::function<BigInt(int, int)> stirling = [](int n, int k) { return stirling2(n, k); };
};

using CheckValue = std::variant<BigInt, IntPolynomial>;

struct Counterexample {
    int n = 0;
    std::optional<int> m;  // Stirling-family column, when applicable
    CheckValue lhs;
    CheckValue rhs;
};

struct IdentityCheck {
    std::string name;
    std::string eq_label;
    int max_n = 0;
    bool passed = false;
    std::optional<Counterexample> counterexample;
};

namespace detail {

inline constexpr int kStirlingIdentityColumnLimit = 8;

using CheckBody = std::optional<Counterexample> (*)(int, const SequenceSource&);

struct CheckDef {
    const char* name;
    const char* eq_label;
    CheckBody body;
};

inline std::vector<BigInt> bell_list(const SequenceSource& src, int upto) {
    std::vector<BigInt> v;
    v.reserve(static_cast<std::size_t>(upto) + 1);
    for (int k = 0; k <= upto; ++k) v.push_back(src.bell(k));
    return v;
}

inline std::vector<BigInt> fubini_list(const SequenceSource& src, int upto) {
    std::vector<BigInt> v;
    v.reserve(static_cast<std::size_t>(upto) + 1);
    for (int k = 0; k <= upto; ++k) v.push_back(src.fubini(k));
    return v;
}

inline std::vector<IntPolynomial> bell_poly_list(const SequenceSource& src, int upto) {
    std::vector<IntPolynomial> v;
    v.reserve(static_cast<std::size_t>(upto) + 1);
    for (int k = 0; k <= upto; ++k) v.push_back(src.bell_poly(k));
    return v;
}

inline std::vector<IntPolynomial> fubini_poly_list(const SequenceSource& src, int upto) {
    std::vector<IntPolynomial> v;
    v.reserve(static_cast<std::size_t>(upto) + 1);
    for (int k = 0; k <= upto; ++k) v.push_back(src.fubini_poly(k));
    return v;
}

// sum_k C(n,k) S(k,m) = S(n+1, m+1).
inline std::optional<Counterexample> stirling_shift(int max_n, const SequenceSource& src) {
    for (int m = 0; m <= kStirlingIdentityColumnLimit; ++m) {
        for (int n = 0; n <= max_n; ++n) {
            const auto row = binomial_row(n);
            BigInt lhs(0);
            for (int k = 0; k <= n; ++k) lhs += row[static_cast<std::size_t>(k)] * src.stirling(k, m);
            const BigInt rhs = src.stirling(n + 1, m + 1);
            if (!(lhs == rhs)) return Counterexample{n, m, lhs, rhs};
        }
    }
    return std::nullopt;
}

// sum_k C(n,k) (-1)^{n-k} S(k+1, m+1) = S(n,m).
inline std::optional<Counterexample> stirling_inverse(int max_n, const SequenceSource& src) {
    for (int m = 0; m <= kStirlingIdentityColumnLimit; ++m) {
        for (int n = 0; n <= max_n; ++n) {
            const auto row = binomial_row(n);
            BigInt lhs(0);
            for (int k = 0; k <= n; ++k) {
                const BigInt term = row[static_cast<std::size_t>(k)] * src.stirling(k + 1, m + 1);
                if ((n - k) % 2 == 0) lhs += term; else lhs -= term;
            }
            const BigInt rhs = src.stirling(n, m);
            if (!(lhs == rhs)) return Counterexample{n, m, lhs, rhs};
        }
    }
    return std::nullopt;
}

// phi_{n+1} = sum_k C(n,k) phi_k.
inline std::optional<Counterexample> bell_shift(int max_n, const SequenceSource& src) {
    const auto phi = bell_list(src, max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        const auto row = binomial_row(n);
        BigInt rhs(0);
        for (int k = 0; k <= n; ++k) rhs += row[static_cast<std::size_t>(k)] * phi[static_cast<std::size_t>(k)];
        const BigInt& lhs = phi[static_cast<std::size_t>(n + 1)];
        if (!(lhs == rhs)) return Counterexample{n, std::nullopt, lhs, rhs};
    }
    return std::nullopt;
}

// phi_n = sum_k C(n,k) (-1)^{n-k} phi_{k+1}.
inline std::optional<Counterexample> bell_inverse(int max_n, const SequenceSource& src) {
    const auto phi = bell_list(src, max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        const auto row = binomial_row(n);
        BigInt rhs(0);
        for (int k = 0; k <= n; ++k) {
            const BigInt term = row[static_cast<std::size_t>(k)] * phi[static_cast<std::size_t>(k + 1)];
            if ((n - k) % 2 == 0) rhs += term; else rhs -= term;
        }
        const BigInt& lhs = phi[static_cast<std::size_t>(n)];
        if (!(lhs == rhs)) return Counterexample{n, std::nullopt, lhs, rhs};
    }
    return std::nullopt;
}

// phi_{n+1}(x) = x sum_k C(n,k) phi_k(x).
inline std::optional<Counterexample> bellpoly_shift(int max_n, const SequenceSource& src) {
    const auto phi = bell_poly_list(src, max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        const auto row = binomial_row(n);
        IntPolynomial sum;
        for (int k = 0; k <= n; ++k) sum += phi[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(k)];
        const IntPolynomial rhs = shifted_up(sum, 1);
        const IntPolynomial& lhs = phi[static_cast<std::size_t>(n + 1)];
        if (!(lhs == rhs)) return Counterexample{n, std::nullopt, lhs, rhs};
    }
    return std::nullopt;
}

// x phi_n(x) = sum_k C(n,k) (-1)^{n-k} phi_{k+1}(x).
inline std::optional<Counterexample> bellpoly_inverse(int max_n, const SequenceSource& src) {
    const auto phi = bell_poly_list(src, max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        const auto row = binomial_row(n);
        IntPolynomial rhs;
        for (int k = 0; k <= n; ++k) {
            const IntPolynomial term = phi[static_cast<std::size_t>(k + 1)] * row[static_cast<std::size_t>(k)];
            if ((n - k) % 2 == 0) rhs += term; else rhs -= term;
        }
        const IntPolynomial lhs = shifted_up(phi[static_cast<std::size_t>(n)], 1);
        if (!(lhs == rhs)) return Counterexample{n, std::nullopt, lhs, rhs};
    }
    return std::nullopt;
}

// phi_{n+1}(x) = x (phi_n(x) + phi_n'(x)).
inline std::optional<Counterexample> bellpoly_derivative(int max_n, const SequenceSource& src) {
    for (int n = 0; n <= max_n; ++n) {
        const IntPolynomial lhs = src.bell_poly(n + 1);
        const IntPolynomial phi_n = src.bell_poly(n);
        const IntPolynomial rhs = shifted_up(phi_n + derivative(phi_n), 1);
        if (!(lhs == rhs)) return Counterexample{n, std::nullopt, lhs, rhs};
    }
    return std::nullopt;
}

// sum_{k=0..n-1} C(n,k) (-1)^k phi_k(x) = sum_{k=1..n} C(n,k) (-1)^{k-1} phi_k'(x).
inline std::optional<Counterexample> bellpoly_symmetric(int max_n, const SequenceSource& src) {
    const auto phi = bell_poly_list(src, max_n);
    for (int n = 0; n <= max_n; ++n) {
        const auto row = binomial_row(n);
        IntPolynomial lhs, rhs;
        for (int k = 0; k < n; ++k) {
            const IntPolynomial term = phi[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(k)];
            if (k % 2 == 0) lhs += term; else lhs -= term;
        }
        for (int k = 1; k <= n; ++k) {
            const IntPolynomial term = derivative(phi[static_cast<std::size_t>(k)]) * row[static_cast<std::size_t>(k)];
            if ((k - 1) % 2 == 0) rhs += term; else rhs -= term;
        }
        if (!(lhs == rhs)) return Counterexample{n, std::nullopt, lhs, rhs};
    }
    return std::nullopt;
}

// 2 F_n = sum_{k=0..n} C(n,k) F_k, for n >= 1.
inline std::optional<Counterexample> fubini_double(int max_n, const SequenceSource& src) {
    const auto fub = fubini_list(src, max_n);
    for (int n = 1; n <= max_n; ++n) {
        const auto row = binomial_row(n);
        BigInt rhs(0);
        for (int k = 0; k <= n; ++k) rhs += row[static_cast<std::size_t>(k)] * fub[static_cast<std::size_t>(k)];
        const BigInt lhs = BigInt(2) * fub[static_cast<std::size_t>(n)];
        if (!(lhs == rhs)) return Counterexample{n, std::nullopt, lhs, rhs};
    }
    return std::nullopt;
}

// F_n = (-1)^n F_0 + 2 sum_{k=1..n} C(n,k) (-1)^{n-k} F_k, for n >= 1: the
// alternating inverse applied to the first column (F_0, 2F_1, 2F_2, ...).
// The k = 0 term carries F_0 once, not doubled.
inline std::optional<Counterexample> fubini_inverse(int max_n, const SequenceSource& src) {
    const auto fub = fubini_list(src, max_n);
    for (int n = 1; n <= max_n; ++n) {
        const auto row = binomial_row(n);
        BigInt rhs = (n % 2 == 0) ? fub[0] : -fub[0];
        for (int k = 1; k <= n; ++k) {
            const BigInt term =
                BigInt(2) * row[static_cast<std::size_t>(k)] * fub[static_cast<std::size_t>(k)];
            if ((n - k) % 2 == 0) rhs += term; else rhs -= term;
        }
        const BigInt& lhs = fub[static_cast<std::size_t>(n)];
        if (!(lhs == rhs)) return Counterexample{n, std::nullopt, lhs, rhs};
    }
    return std::nullopt;
}

// x a_0^n = F_{n+1}(x) - x sum_{k=1..n} C(n,k-1) F_k(x), with a_0^n the first
// column of the matrix built from F_0(x)..F_max(x).
inline std::optional<Counterexample> fubinipoly_column(int max_n, const SequenceSource& src) {
    const auto fub = fubini_poly_list(src, max_n + 1);
    const ESMatrix<IntPolynomial> matrix(
        std::vector<IntPolynomial>(fub.begin(), fub.begin() + max_n + 1));
    const auto column = matrix.first_column();
    for (int n = 0; n <= max_n; ++n) {
        const auto row = binomial_row(n);
        IntPolynomial sum;
        for (int k = 1; k <= n; ++k) sum += fub[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(k - 1)];
        const IntPolynomial lhs = shifted_up(column[static_cast<std::size_t>(n)], 1);
        const IntPolynomial rhs = fub[static_cast<std::size_t>(n + 1)] - shifted_up(sum, 1);
        if (!(lhs == rhs)) return Counterexample{n, std::nullopt, lhs, rhs};
    }
    return std::nullopt;
}

// F_n(x) = x sum_{k<n} C(n,k) F_k(x); the empty sum forces n >= 1.
inline std::optional<Counterexample> fubinipoly_recurrence(int max_n, const SequenceSource& src) {
    const auto fub = fubini_poly_list(src, max_n);
    for (int n = 1; n <= max_n; ++n) {
        const auto row = binomial_row(n);
        IntPolynomial sum;
        for (int k = 0; k < n; ++k) sum += fub[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(k)];
        const IntPolynomial rhs = shifted_up(sum, 1);
        const IntPolynomial& lhs = fub[static_cast<std::size_t>(n)];
        if (!(lhs == rhs)) return Counterexample{n, std::nullopt, lhs, rhs};
    }
    return std::nullopt;
}

// (1+x) F_{n+1}(x) = x sum_k C(n,k) [F_k(x) + F_{k+1}(x)].
inline std::optional<Counterexample> fubinipoly_sum(int max_n, const SequenceSource& src) {
    const auto fub = fubini_poly_list(src, max_n + 1);
    const IntPolynomial one_plus_x{BigInt(1), BigInt(1)};
    for (int n = 0; n <= max_n; ++n) {
        const auto row = binomial_row(n);
        IntPolynomial sum;
        for (int k = 0; k <= n; ++k) {
            sum += (fub[static_cast<std::size_t>(k)] + fub[static_cast<std::size_t>(k + 1)]) *
                   row[static_cast<std::size_t>(k)];
        }
        const IntPolynomial lhs = one_plus_x * fub[static_cast<std::size_t>(n + 1)];
        const IntPolynomial rhs = shifted_up(sum, 1);
        if (!(lhs == rhs)) return Counterexample{n, std::nullopt, lhs, rhs};
    }
    return std::nullopt;
}

// F_{n+1}(x) = x sum_k C(n,k) [F_k(x) + x F_k'(x)].
inline std::optional<Counterexample> fubinipoly_derivative_rec(int max_n, const SequenceSource& src) {
    const auto fub = fubini_poly_list(src, max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        const auto row = binomial_row(n);
        IntPolynomial sum;
        for (int k = 0; k <= n; ++k) {
            const auto& fk = fub[static_cast<std::size_t>(k)];
            sum += (fk + shifted_up(derivative(fk), 1)) * row[static_cast<std::size_t>(k)];
        }
        const IntPolynomial rhs = shifted_up(sum, 1);
        const IntPolynomial& lhs = fub[static_cast<std::size_t>(n + 1)];
        if (!(lhs == rhs)) return Counterexample{n, std::nullopt, lhs, rhs};
    }
    return std::nullopt;
}

// sum_{k=0..n} C(n,k) x F_k'(x) = sum_{k=1..n} C(n,k-1) F_k(x).
inline std::optional<Counterexample> fubinipoly_symmetric(int max_n, const SequenceSource& src) {
    const auto fub = fubini_poly_list(src, max_n);
    for (int n = 0; n <= max_n; ++n) {
        const auto row = binomial_row(n);
        IntPolynomial lhs, rhs;
        for (int k = 0; k <= n; ++k) {
            lhs += shifted_up(derivative(fub[static_cast<std::size_t>(k)]), 1) *
                   row[static_cast<std::size_t>(k)];
        }
        for (int k = 1; k <= n; ++k) {
            rhs += fub[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(k - 1)];
        }
        if (!(lhs == rhs)) return Counterexample{n, std::nullopt, lhs, rhs};
    }
    return std::nullopt;
}

inline const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {"stirling_shift", "19", &stirling_shift},
        {"stirling_inverse", "20", &stirling_inverse},
        {"bell_shift", "21", &bell_shift},
        {"bell_inverse", "22", &bell_inverse},
        {"bellpoly_shift", "23'", &bellpoly_shift},
        {"bellpoly_inverse", "24", &bellpoly_inverse},
        {"bellpoly_derivative", "25'", &bellpoly_derivative},
        {"bellpoly_symmetric", "26", &bellpoly_symmetric},
        {"fubini_double", "27", &fubini_double},
        {"fubini_inverse", "28", &fubini_inverse},
        {"fubinipoly_column", "29", &fubinipoly_column},
        {"fubinipoly_recurrence", "30", &fubinipoly_recurrence},
        {"fubinipoly_sum", "31", &fubinipoly_sum},
        {"fubinipoly_derivative_rec", "32", &fubinipoly_derivative_rec},
        {"fubinipoly_symmetric", "33", &fubinipoly_symmetric},
    };
    return defs;
}

inline IdentityCheck run(const CheckDef& def, int max_n, const SequenceSource& src) {
    IdentityCheck result{def.name, def.eq_label, max_n, false, std::nullopt};
    result.counterexample = def.body(max_n, src);
    result.passed = !result.counterexample.has_value();
    return result;
}

}  // namespace detail

// Names of every registered identity check, in registry order.
inline std::vector<std::string> registered_check_names() {
    std::vector<std::string> names;
    for (const auto& def : detail::registry()) names.emplace_back(def.name);
    return names;
}

// Verifies one named identity for every n (and Stirling column m) in range.
inline IdentityCheck check(const std::string& name, int max_n,
                           const SequenceSource& source = SequenceSource{}) {
    if (max_n < 1) throw std::invalid_argument("check: max_n must be at least 1");
    for (const auto& def : detail::registry()) {
        if (name == def.name) return detail::run(def, max_n, source);
    }
    std::string known;
    for (const auto& def : detail::registry()) {
        if (!known.empty()) known += ", ";
        known += def.name;
    }
    throw std::invalid_argument("check: unknown identity '" + name +
                                "'; registered: " + known);
}

// Runs the whole registry, in registry order.
inline std::vector<IdentityCheck> check_all(int max_n,
                                            const SequenceSource& source = SequenceSource{}) {
    if (max_n < 1) throw std::invalid_argument("check_all: max_n must be at least 1");
    std::vector<IdentityCheck> results;
    results.reserve(detail::registry().size());
    for (const auto& def : detail::registry()) results.push_back(detail::run(def, max_n, source));
    return results;
}

}  // namespace eskit
