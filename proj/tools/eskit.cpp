// eskit: exact Euler-Seidel matrices, Bell/Fubini/Stirling sequences, and the
// identity and generating-function verification suites, from the command line.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "eskit/cli.hpp"

namespace {

using eskit::cli::kExitUsage;
using eskit::cli::OutputFormat;

struct FormatFlags {
    bool json = false;
    bool csv = false;

    OutputFormat resolve() const {
        if (json) return OutputFormat::json;
        if (csv) return OutputFormat::csv;
        return OutputFormat::table;
    }
};

void add_format_flags(CLI::App* cmd, FormatFlags& flags) {
    auto* json = cmd->add_flag("--json", flags.json, "machine-readable JSON output");
    cmd->add_flag("--csv", flags.csv, "CSV output")->excludes(json);
}

eskit::SeqKind parse_kind_or_exit(const std::string& name, std::optional<int> m) {
    const auto kind = eskit::parse_seq_kind(name, m);
    if (!kind.has_value()) {
        if (name == "stirling2") {
            throw CLI::ValidationError("stirling2 requires a fixed column: pass --m <m> with m >= 0");
        }
        throw CLI::ValidationError("unknown kind '" + name +
                                   "'; expected stirling2, bell, bellpoly, fubini or fubinipoly");
    }
    return *kind;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Euler-Seidel matrix and special-sequence toolkit"};
    app.require_subcommand(1);

    std::string seq_kind_name, matrix_kind_name, check_target = "all";
    int count = 0, size = 0, max_n = 0, order = 0;
    std::optional<int> seq_m, matrix_m;
    FormatFlags seq_fmt, matrix_fmt, check_fmt, series_fmt;

    auto* seq = app.add_subcommand("seq", "print terms of a sequence family");
    seq->alias("poly");
    seq->add_option("kind", seq_kind_name, "stirling2|bell|bellpoly|fubini|fubinipoly")->required();
    seq->add_option("--count", count, "number of terms, from index 0")->required()
        ->check(CLI::PositiveNumber);
    seq->add_option("--m", seq_m, "fixed column for stirling2");
    add_format_flags(seq, seq_fmt);

    auto* esmatrix = app.add_subcommand("esmatrix", "build and print an Euler-Seidel triangle");
    esmatrix->add_option("kind", matrix_kind_name, "stirling2|bell|bellpoly|fubini|fubinipoly")->required();
    esmatrix->add_option("--size", size, "length of the initial sequence")->required()
        ->check(CLI::PositiveNumber);
    esmatrix->add_option("--m", matrix_m, "fixed column for stirling2");
    add_format_flags(esmatrix, matrix_fmt);

    auto* check = app.add_subcommand("check", "run identity checks over a range of n");
    check->add_option("target", check_target, "a registered identity name, or 'all'")->required();
    check->add_option("--max-n", max_n, "verify every n up to this bound")->required()
        ->check(CLI::PositiveNumber);
    add_format_flags(check, check_fmt);

    auto* series = app.add_subcommand("series", "run generating-function checks at a truncation order");
    series->add_option("--order", order, "truncation order, at least 4")
        ->default_val(32);
    add_format_flags(series, series_fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (seq->parsed()) {
            const auto kind = parse_kind_or_exit(seq_kind_name, seq_m);
            const auto rendered = eskit::cli::render_seq(kind, count, seq_fmt.resolve());
            std::cout << rendered.text;
            return rendered.exit_code;
        }
        if (esmatrix->parsed()) {
            const auto kind = parse_kind_or_exit(matrix_kind_name, matrix_m);
            const auto rendered = eskit::cli::render_esmatrix(kind, size, matrix_fmt.resolve());
            std::cout << rendered.text;
            return rendered.exit_code;
        }
        if (check->parsed()) {
            std::vector<eskit::IdentityCheck> results;
            if (check_target == "all") {
                results = eskit::check_all(max_n);
            } else {
                results.push_back(eskit::check(check_target, max_n));
            }
            const auto rendered = eskit::cli::render_check_results(results, check_fmt.resolve());
            std::cout << rendered.text;
            return rendered.exit_code;
        }
        if (series->parsed()) {
            const auto results = eskit::run_series_checks(order);
            const auto rendered = eskit::cli::render_series_results(results, series_fmt.resolve());
            std::cout << rendered.text;
            return rendered.exit_code;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        // library preconditions (unknown check name, order < 4, ...) are usage errors
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
