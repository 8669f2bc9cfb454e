#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "eskit/euler_seidel.hpp"
#include "eskit/identity_suite.hpp"
#include "eskit/sequences.hpp"
#include "eskit/series_engine.hpp"

namespace eskit::cli {

enum class OutputFormat { table, json, csv };

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

using ordered_json = nlohmann::ordered_json;

// All numbers serialize as decimal strings so nothing is ever squeezed
// through a 64-bit or floating-point representation.
inline ordered_json number_to_json(const BigInt& v) { return v.to_string(); }

inline ordered_json polynomial_to_json(const IntPolynomial& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.to_string());
    return arr;
}

inline std::string polynomial_table_cell(const IntPolynomial& p) {
    std::string out = "[";
    bool first = true;
    for (const auto& c : p.coefficients()) {
        if (!first) out += ", ";
        out += c.to_string();
        first = false;
    }
    out += "]";
    return out;
}

inline std::string polynomial_csv_cell(const IntPolynomial& p) {
    std::string out;
    bool first = true;
    for (const auto& c : p.coefficients()) {
        if (!first) out += ";";
        out += c.to_string();
        first = false;
    }
    return out;
}

struct RenderedOutput {
    std::string text;
    int exit_code = kExitOk;
};

// seq / poly: terms 0..count-1 of one family.
inline RenderedOutput render_seq(const SeqKind& kind, int count, OutputFormat format) {
    std::ostringstream out;
    if (kind.is_polynomial()) {
        std::vector<IntPolynomial> terms;
        terms.reserve(static_cast<std::size_t>(count));
        for (int n = 0; n < count; ++n) terms.push_back(polynomial_term(kind, n));
        switch (format) {
            case OutputFormat::json: {
                ordered_json arr = ordered_json::array();
                for (const auto& p : terms) arr.push_back(polynomial_to_json(p));
                out << arr.dump() << '\n';
                break;
            }
            case OutputFormat::csv:
                out << "n,value\n";
                for (int n = 0; n < count; ++n) {
                    out << n << ',' << polynomial_csv_cell(terms[static_cast<std::size_t>(n)]) << '\n';
                }
                break;
            case OutputFormat::table:
                for (const auto& p : terms) out << polynomial_table_cell(p) << '\n';
                break;
        }
    } else {
        std::vector<BigInt> terms;
        terms.reserve(static_cast<std::size_t>(count));
        for (int n = 0; n < count; ++n) terms.push_back(number_term(kind, n));
        switch (format) {
            case OutputFormat::json: {
                ordered_json arr = ordered_json::array();
                for (const auto& v : terms) arr.push_back(number_to_json(v));
                out << arr.dump() << '\n';
                break;
            }
            case OutputFormat::csv:
                out << "n,value\n";
                for (int n = 0; n < count; ++n) {
                    out << n << ',' << terms[static_cast<std::size_t>(n)].to_string() << '\n';
                }
                break;
            case OutputFormat::table: {
                for (std::size_t i = 0; i < terms.size(); ++i) {
                    if (i) out << ' ';
                    out << terms[i].to_string();
                }
                out << '\n';
                break;
            }
        }
    }
    return {out.str(), kExitOk};
}

namespace detail {

template <typename E, typename Cell>
void render_matrix(std::ostringstream& out, const ESMatrix<E>& m, const SeqKind& kind,
                   OutputFormat format, Cell cell, ordered_json (*to_json)(const E&)) {
    switch (format) {
        case OutputFormat::json: {
            ordered_json doc;
            doc["kind"] = seq_kind_name(kind);
            doc["size"] = m.size();
            ordered_json rows = ordered_json::array();
            for (std::size_t k = 0; k < m.size(); ++k) {
                ordered_json row = ordered_json::array();
                for (const auto& e : m.row(k)) row.push_back(to_json(e));
                rows.push_back(std::move(row));
            }
            doc["rows"] = std::move(rows);
            out << doc.dump() << '\n';
            break;
        }
        case OutputFormat::csv:
            out << "k,n,value\n";
            for (std::size_t k = 0; k < m.size(); ++k) {
                for (std::size_t n = 0; n < m.row(k).size(); ++n) {
                    out << k << ',' << n << ',' << cell(m.entry(k, n)) << '\n';
                }
            }
            break;
        case OutputFormat::table:
            for (std::size_t k = 0; k < m.size(); ++k) {
                for (std::size_t n = 0; n < m.row(k).size(); ++n) {
                    if (n) out << ' ';
                    out << cell(m.entry(k, n));
                }
                out << '\n';
            }
            break;
    }
}

}  // namespace detail

// esmatrix: the Euler-Seidel triangle built from the family's first `size` terms.
inline RenderedOutput render_esmatrix(const SeqKind& kind, int size, OutputFormat format) {
    std::ostringstream out;
    if (kind.is_polynomial()) {
        std::vector<IntPolynomial> initial;
        initial.reserve(static_cast<std::size_t>(size));
        for (int n = 0; n < size; ++n) initial.push_back(polynomial_term(kind, n));
        const ESMatrix<IntPolynomial> m(std::move(initial));
        const auto cell = [format](const IntPolynomial& p) {
            return format == OutputFormat::csv ? polynomial_csv_cell(p)
                                               : polynomial_table_cell(p);
        };
        detail::render_matrix<IntPolynomial>(out, m, kind, format, cell,
                                             &polynomial_to_json);
    } else {
        std::vector<BigInt> initial;
        initial.reserve(static_cast<std::size_t>(size));
        for (int n = 0; n < size; ++n) initial.push_back(number_term(kind, n));
        const ESMatrix<BigInt> m(std::move(initial));
        detail::render_matrix<BigInt>(
            out, m, kind, format,
            [](const BigInt& v) { return v.to_string(); },
            &number_to_json);
    }
    return {out.str(), kExitOk};
}

inline ordered_json counterexample_to_json(const Counterexample& ce) {
    ordered_json doc;
    doc["n"] = ce.n;
    if (ce.m.has_value()) doc["m"] = *ce.m;
    const auto value_json = [](const CheckValue& v) -> ordered_json {
        if (std::holds_alternative<BigInt>(v)) return number_to_json(std::get<BigInt>(v));
        return polynomial_to_json(std::get<IntPolynomial>(v));
    };
    doc["lhs"] = value_json(ce.lhs);
    doc["rhs"] = value_json(ce.rhs);
    return doc;
}

inline std::string counterexample_table_cell(const Counterexample& ce) {
    const auto value_text = [](const CheckValue& v) {
        if (std::holds_alternative<BigInt>(v)) return std::get<BigInt>(v).to_string();
        return polynomial_table_cell(std::get<IntPolynomial>(v));
    };
    std::string out = "n=" + std::to_string(ce.n);
    if (ce.m.has_value()) out += " m=" + std::to_string(*ce.m);
    out += " lhs=" + value_text(ce.lhs) + " rhs=" + value_text(ce.rhs);
    return out;
}

// check: one line per identity; exit 1 when anything failed.
inline RenderedOutput render_check_results(const std::vector<IdentityCheck>& results,
                                           OutputFormat format) {
    std::ostringstream out;
    bool all_passed = true;
    for (const auto& r : results) all_passed = all_passed && r.passed;

    switch (format) {
        case OutputFormat::json: {
            ordered_json doc;
            ordered_json arr = ordered_json::array();
            for (const auto& r : results) {
                ordered_json item;
                item["name"] = r.name;
                item["eq"] = r.eq_label;
                item["max_n"] = r.max_n;
                item["status"] = r.passed ? "pass" : "fail";
                if (r.counterexample.has_value()) {
                    item["counterexample"] = counterexample_to_json(*r.counterexample);
                }
                arr.push_back(std::move(item));
            }
            doc["results"] = std::move(arr);
            out << doc.dump() << '\n';
            break;
        }
        case OutputFormat::csv:
            out << "name,eq,max_n,status,counterexample\n";
            for (const auto& r : results) {
                out << r.name << ',' << r.eq_label << ',' << r.max_n << ','
                    << (r.passed ? "pass" : "fail") << ',';
                if (r.counterexample.has_value()) {
                    std::string cell = counterexample_table_cell(*r.counterexample);
                    for (char& c : cell) {
                        if (c == ',') c = ';';
                    }
                    out << cell;
                }
                out << '\n';
            }
            break;
        case OutputFormat::table:
            for (const auto& r : results) {
                out << (r.passed ? "pass" : "FAIL") << ' ' << r.name
                    << " (eq " << r.eq_label << ") max_n=" << r.max_n << '\n';
                if (r.counterexample.has_value()) {
                    out << "  counterexample: " << counterexample_table_cell(*r.counterexample)
                        << '\n';
                }
            }
            break;
    }
    return {out.str(), all_passed ? kExitOk : kExitCheckFailed};
}

// series: one line per named generating-function check; exit 1 on failure.
inline RenderedOutput render_series_results(const std::vector<SeriesCheckResult>& results,
                                            OutputFormat format) {
    std::ostringstream out;
    bool all_passed = true;
    for (const auto& r : results) all_passed = all_passed && r.passed;

    switch (format) {
        case OutputFormat::json: {
            ordered_json doc;
            ordered_json arr = ordered_json::array();
            for (const auto& r : results) {
                ordered_json item;
                item["name"] = r.name;
                item["order"] = r.order;
                item["status"] = r.passed ? "pass" : "fail";
                if (r.first_mismatch.has_value()) item["first_mismatch"] = *r.first_mismatch;
                arr.push_back(std::move(item));
            }
            doc["results"] = std::move(arr);
            out << doc.dump() << '\n';
            break;
        }
        case OutputFormat::csv:
            out << "name,order,status,first_mismatch\n";
            for (const auto& r : results) {
                out << r.name << ',' << r.order << ',' << (r.passed ? "pass" : "fail") << ',';
                if (r.first_mismatch.has_value()) out << *r.first_mismatch;
                out << '\n';
            }
            break;
        case OutputFormat::table:
            for (const auto& r : results) {
                out << (r.passed ? "pass" : "FAIL") << ' ' << r.name << " order=" << r.order;
                if (r.first_mismatch.has_value()) {
                    out << " first_mismatch=" << *r.first_mismatch;
                }
                out << '\n';
            }
            break;
    }
    return {out.str(), all_passed ? kExitOk : kExitCheckFailed};
}

}  // namespace eskit::cli
