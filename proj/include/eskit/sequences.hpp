#pragma once

#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eskit/bigint.hpp"
#include "eskit/binomial.hpp"
#include "eskit/polynomial.hpp"

namespace eskit {

namespace detail {

// Triangle of Stirling numbers of the second kind, grown on demand from
// S(n,k) = k*S(n-1,k) + S(n-1,k-1), S(0,0) = 1. Callers get copies; the
// cache is guarded so concurrent readers and the growing writer never race.
class StirlingTable {
public:
    static std::vector<BigInt> row(int n) {
        static StirlingTable table;
        std::scoped_lock lock(table.mu_);
        table.grow(n);
        return table.rows_[static_cast<std::size_t>(n)];
    }

private:
    StirlingTable() { rows_.push_back({BigInt(1)}); }

    void grow(int n) {
        while (static_cast<int>(rows_.size()) <= n) {
            const auto& prev = rows_.back();
            const std::size_t m = rows_.size();
            std::vector<BigInt> next(m + 1);
            for (std::size_t k = 1; k < m; ++k) {
                next[k] = BigInt(static_cast<long long>(k)) * prev[k] + prev[k - 1];
            }
            next[m] = BigInt(1);
            rows_.push_back(std::move(next));
        }
    }

    std::vector<std::vector<BigInt>> rows_;
    std::mutex mu_;
};

}  // namespace detail

// Stirling number of the second kind; zero when k > n.
inline BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
    if (k > n) return BigInt(0);
    return detail::StirlingTable::row(n)[static_cast<std::size_t>(k)];
}

// phi_n(x) = sum_k S(n,k) x^k.
inline IntPolynomial bell_polynomial(int n) {
    if (n < 0) throw std::invalid_argument("bell_polynomial: negative n");
    return IntPolynomial(detail::StirlingTable::row(n));
}

// phi_n = phi_n(1), computed as the Stirling row sum.
inline BigInt bell_number(int n) {
    if (n < 0) throw std::invalid_argument("bell_number: negative n");
    BigInt total(0);
    for (const auto& s : detail::StirlingTable::row(n)) total += s;
    return total;
}

// F_n(x) = sum_k S(n,k) k! x^k.
inline IntPolynomial fubini_polynomial(int n) {
    if (n < 0) throw std::invalid_argument("fubini_polynomial: negative n");
    std::vector<BigInt> coeffs = detail::StirlingTable::row(n);
    BigInt kfact(1);
    for (std::size_t k = 2; k < coeffs.size(); ++k) {
        kfact *= BigInt(static_cast<long long>(k));
        coeffs[k] *= kfact;
    }
    return IntPolynomial(std::move(coeffs));
}

// F_n = F_n(1).
inline BigInt fubini_number(int n) {
    if (n < 0) throw std::invalid_argument("fubini_number: negative n");
    const auto row = detail::StirlingTable::row(n);
    BigInt total(0);
    BigInt kfact(1);
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (k >= 2) kfact *= BigInt(static_cast<long long>(k));
        total += row[k] * kfact;
    }
    return total;
}

// x^k -> k! x^k: the exact value of the integral of p(x*lambda) e^{-lambda}
// over lambda in [0, inf), taken term-wise. Carries Bell polynomials onto
// Fubini polynomials.
inline IntPolynomial gamma_transform(const IntPolynomial& p) {
    std::vector<BigInt> coeffs = p.coefficients();
    BigInt kfact(1);
    for (std::size_t k = 2; k < coeffs.size(); ++k) {
        kfact *= BigInt(static_cast<long long>(k));
        coeffs[k] *= kfact;
    }
    return IntPolynomial(std::move(coeffs));
}

// Families a CLI request or matrix build can draw terms from. Stirling2
// carries its fixed column m.
struct SeqKind {
    enum class Tag { stirling2, bell_number, bell_poly, fubini_number, fubini_poly };

    Tag tag;
    int m = 0;

    bool is_polynomial() const { return tag == Tag::bell_poly || tag == Tag::fubini_poly; }
};

inline std::optional<SeqKind> parse_seq_kind(std::string_view name, std::optional<int> m) {
    SeqKind kind{SeqKind::Tag::bell_number, 0};
    if (name == "stirling2") {
        if (!m.has_value() || *m < 0) return std::nullopt;  // column is mandatory
        kind.tag = SeqKind::Tag::stirling2;
        kind.m = *m;
    } else if (name == "bell") {
        kind.tag = SeqKind::Tag::bell_number;
    } else if (name == "bellpoly") {
        kind.tag = SeqKind::Tag::bell_poly;
    } else if (name == "fubini") {
        kind.tag = SeqKind::Tag::fubini_number;
    } else if (name == "fubinipoly") {
        kind.tag = SeqKind::Tag::fubini_poly;
    } else {
        return std::nullopt;
    }
    return kind;
}

inline std::string seq_kind_name(const SeqKind& kind) {
    switch (kind.tag) {
        case SeqKind::Tag::stirling2: return "stirling2";
        case SeqKind::Tag::bell_number: return "bell";
        case SeqKind::Tag::bell_poly: return "bellpoly";
        case SeqKind::Tag::fubini_number: return "fubini";
        case SeqKind::Tag::fubini_poly: return "fubinipoly";
    }
    return "?";
}

inline BigInt number_term(const SeqKind& kind, int n) {
    switch (kind.tag) {
        case SeqKind::Tag::stirling2: return stirling2(n, kind.m);
        case SeqKind::Tag::bell_number: return bell_number(n);
        case SeqKind::Tag::fubini_number: return fubini_number(n);
        default:
            throw std::invalid_argument("number_term: " + seq_kind_name(kind) +
                                        " is a polynomial family");
    }
}

inline IntPolynomial polynomial_term(const SeqKind& kind, int n) {
    switch (kind.tag) {
        case SeqKind::Tag::bell_poly: return bell_polynomial(n);
        case SeqKind::Tag::fubini_poly: return fubini_polynomial(n);
        default:
            throw std::invalid_argument("polynomial_term: " + seq_kind_name(kind) +
                                        " is a number family");
    }
}

}  // namespace eskit
