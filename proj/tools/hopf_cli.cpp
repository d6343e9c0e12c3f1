#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hopf/charvar.hpp"
#include "hopf/ffcount.hpp"
#include "hopf/geom.hpp"
#include "hopf/report.hpp"

using namespace hopf;

namespace {

enum Exit { ok = 0, mismatch = 1, usage = 2 };

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

void log_time(const char* what, double ms) { std::fprintf(stderr, "[time] %s: %.1f ms\n", what, ms); }

std::string render(const Poly& p, bool latex) { return latex ? p.to_latex() : p.to_ascii(); }

void check_rank(int rank) {
    if (rank != 2 && rank != 3) throw std::invalid_argument("--rank must be 2 or 3");
}

int cmd_rep(int rank, std::int64_t n, const std::string& method, bool latex) {
    check_rank(rank);
    const Timer timer;
    VerificationReport report{rank, n, std::nullopt, std::nullopt, {}, 0};
    const TwistCount tn(n);
    if (method != "strata") report.formula = rep_variety_epoly_formula(rank, tn);
    if (method != "formula") report.strata = rep_variety_epoly_strata(rank, tn);
    report.millis = timer.millis();
    if (method == "both") {
        std::cout << "formula: " << render(*report.formula, latex) << '\n';
        std::cout << "strata:  " << render(*report.strata, latex) << '\n';
        std::cout << (*report.methods_match() ? "MATCH" : "MISMATCH") << '\n';
    } else {
        std::cout << render(report.formula ? *report.formula : *report.strata, latex) << '\n';
    }
    log_time("rep", report.millis);
    return report.all_match() ? ok : mismatch;
}

std::string short_name(CharPieceKind k) {
    switch (k) {
        case CharPieceKind::red_total: return "red";
        case CharPieceKind::irr_total: return "irr";
        default: return CharPiece{3, k}.name();
    }
}

int cmd_char(int rank, std::int64_t n, bool pieces, bool latex) {
    check_rank(rank);
    const Timer timer;
    const TwistCount tn(n);
    const Poly formula = char_variety_epoly_formula(rank, tn);
    bool consistent = true;
    if (pieces) {
        for (CharPieceKind k : char_piece_kinds(rank)) {
            const Poly p = char_piece_epoly(CharPiece::make(rank, k), tn);
            if (k == CharPieceKind::total) consistent = p == formula;
            std::cout << short_name(k) << ": " << render(p, latex) << '\n';
        }
        if (!consistent) std::cout << "MISMATCH: piece sum differs from " << render(formula, latex) << '\n';
    } else {
        std::cout << render(formula, latex) << '\n';
    }
    log_time("char", timer.millis());
    return consistent ? ok : mismatch;
}

int cmd_count(int rank, std::int64_t n, std::int64_t q, bool assert_equal, unsigned threads,
              std::optional<double> max_enum) {
    check_rank(rank);
    if (q < 3 || q >= (1 << 16)) throw std::invalid_argument("--q must be an odd prime below 65536");
    const TwistCount tn(n);
    const bool admissible = ff::oracle_admissible(rank, n, q);
    const std::int64_t step = rank == 2 ? 2 * n : 6 * n;
    if (assert_equal && !admissible)
        throw std::invalid_argument("--assert needs " + std::to_string(step) + " | q-1, but " + std::to_string(step) +
                                    " does not divide " + std::to_string(q - 1));
    ff::CountOptions options;
    options.threads = threads;
    if (max_enum) options.max_enumeration = *max_enum;

    const Timer timer;
    const Int count = ff::count_rep_variety_points(rank, tn, static_cast<std::uint32_t>(q), options);
    const PointCount pc = make_point_count(rank, n, static_cast<std::uint32_t>(q), count);
    log_time("count", timer.millis());

    std::cout << to_string(count) << '\n';
    if (!admissible) {
        std::cout << "no equality asserted (" << step << " ∤ " << q - 1 << ")\n";
        return ok;
    }
    const Int expected = rep_variety_epoly_formula(rank, tn).eval(q);
    if (!assert_equal) {
        std::cout << "formula at q=" << q << ": " << to_string(expected) << '\n';
        return ok;
    }
    std::cout << (*pc.match ? "MATCH" : "MISMATCH") << " (formula at q=" << q << ": " << to_string(expected) << ")\n";
    return *pc.match ? ok : mismatch;
}

int cmd_table(int rank, const std::string& range, const std::string& target, const std::string& format) {
    check_rank(rank);
    const auto [first, last] = parse_n_range(range);
    const TableTarget t = parse_table_target(target);
    const TableFormat f = parse_table_format(format);
    const Timer timer;
    const auto rows = table_rows(rank, first, last, t);
    switch (f) {
        case TableFormat::csv: std::cout << render_csv(rows); break;
        case TableFormat::json: std::cout << render_json(rank, t, rows); break;
        case TableFormat::latex: std::cout << render_latex(rank, t, rows); break;
    }
    log_time("table", timer.millis());
    for (const auto& row : rows)
        if (!row.match()) return mismatch;
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"E-polynomials of SL2/SL3 representation and character varieties of the twisted Hopf link"};
    app.require_subcommand(1);

    int rank = 2;
    std::int64_t n = 1;
    bool latex = false;

    auto* rep = app.add_subcommand("rep", "E-polynomial of the representation variety");
    std::string method = "formula";
    rep->add_option("--rank", rank, "2 or 3")->required();
    rep->add_option("--n", n, "number of twists, >= 1")->required();
    rep->add_option("--method", method, "formula, strata or both")
        ->check(CLI::IsMember({"formula", "strata", "both"}));
    rep->add_flag("--latex", latex, "LaTeX output");

    auto* chr = app.add_subcommand("char", "E-polynomial of the character variety");
    bool pieces = false;
    chr->add_option("--rank", rank, "2 or 3")->required();
    chr->add_option("--n", n, "number of twists, >= 1")->required();
    chr->add_flag("--pieces", pieces, "reducible / irreducible breakdown");
    chr->add_flag("--latex", latex, "LaTeX output");

    auto* count = app.add_subcommand("count", "point count over F_q by enumeration");
    std::int64_t q = 0;
    bool assert_equal = false;
    unsigned threads = 0;
    std::optional<double> max_enum;
    count->add_option("--rank", rank, "2 or 3")->required();
    count->add_option("--n", n, "number of twists, >= 1")->required();
    count->add_option("--q", q, "odd prime")->required();
    count->add_flag("--assert", assert_equal, "compare with the E-polynomial; exit 1 on mismatch");
    count->add_option("--threads", threads, "worker threads (0 = all cores)");
    count->add_option("--max-enum", max_enum, "refuse when q^(r^2) exceeds this (default 1e10 or $HOPF_MAX_ENUM)");

    auto* table = app.add_subcommand("table", "tabulate over a range of n");
    std::string range;
    std::string target = "rep";
    std::string format = "csv";
    table->add_option("--rank", rank, "2 or 3")->required();
    table->add_option("--n", range, "range A..B")->required();
    table->add_option("--target", target, "rep or char")->check(CLI::IsMember({"rep", "char"}));
    table->add_option("--format", format, "csv, latex or json")->check(CLI::IsMember({"csv", "latex", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*rep) return cmd_rep(rank, n, method, latex);
        if (*chr) return cmd_char(rank, n, pieces, latex);
        if (*count) return cmd_count(rank, n, q, assert_equal, threads, max_enum);
        if (*table) return cmd_table(rank, range, target, format);
    } catch (const ff::ResourceLimitError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
