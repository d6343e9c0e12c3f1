#pragma once

// Verification reports and tabular output (CSV, JSON, LaTeX) for the CLI.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopf/poly.hpp"

namespace hopf {

struct PointCount {
    std::uint32_t q;
    Int count;
    /// Whether the divisibility condition holds, so equality is expected.
    bool admissible;
    /// Only set when admissible.
    std::optional<bool> match;
};

struct VerificationReport {
    int rank;
    std::int64_t n;
    std::optional<Poly> formula;
    std::optional<Poly> strata;
    std::vector<PointCount> counts;
    double millis = 0;

    /// Formula vs strata, when both were computed.
    std::optional<bool> methods_match() const;
    /// False iff some computed comparison failed.
    bool all_match() const;
};

/// Builds the count entry, comparing against the formula when admissible.
PointCount make_point_count(int rank, std::int64_t n, std::uint32_t q, Int count);

enum class TableTarget { rep, character };
enum class TableFormat { csv, latex, json };

TableTarget parse_table_target(const std::string& s);
TableFormat parse_table_format(const std::string& s);

/// Parses "A..B" or a single "A". Throws std::invalid_argument on malformed
/// input, n < 1, or an empty range.
std::pair<std::int64_t, std::int64_t> parse_n_range(const std::string& s);

struct TableRow {
    std::int64_t n;
    /// Closed formula.
    Poly formula;
    /// Independent assembly: strata sum (rep) or piece sum (character).
    Poly assembled;
    bool match() const { return formula == assembled; }
};

std::vector<TableRow> table_rows(int rank, std::int64_t n_first, std::int64_t n_last, TableTarget target);

/// Header "n,degree,coefficients,eval_q2"; coefficients descending, quoted.
std::string render_csv(const std::vector<TableRow>& rows);
std::string render_json(int rank, TableTarget target, const std::vector<TableRow>& rows);
std::string render_latex(int rank, TableTarget target, const std::vector<TableRow>& rows);

/// Descending coefficients narrowed to int64; throws std::overflow_error.
std::vector<std::int64_t> descending_int64(const Poly& p);

}  // namespace hopf
