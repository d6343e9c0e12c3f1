#include "hopf/report.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hopf/charvar.hpp"
#include "hopf/ffcount.hpp"
#include "hopf/geom.hpp"

namespace hopf {

std::optional<bool> VerificationReport::methods_match() const {
    if (!formula || !strata) return std::nullopt;
    return *formula == *strata;
}

bool VerificationReport::all_match() const {
    if (methods_match() == false) return false;
    for (const auto& c : counts)
        if (c.match == false) return false;
    return true;
}

PointCount make_point_count(int rank, std::int64_t n, std::uint32_t q, Int count) {
    PointCount pc{q, count, ff::oracle_admissible(rank, n, q), std::nullopt};
    if (pc.admissible) pc.match = rep_variety_epoly_formula(rank, TwistCount(n)).eval(q) == count;
    return pc;
}

TableTarget parse_table_target(const std::string& s) {
    if (s == "rep") return TableTarget::rep;
    if (s == "char") return TableTarget::character;
    throw std::invalid_argument("unknown table target '" + s + "' (rep|char)");
}

TableFormat parse_table_format(const std::string& s) {
    if (s == "csv") return TableFormat::csv;
    if (s == "latex") return TableFormat::latex;
    if (s == "json") return TableFormat::json;
    throw std::invalid_argument("unknown table format '" + s + "' (csv|latex|json)");
}

namespace {

std::int64_t parse_positive(const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    if (v < 1) throw std::invalid_argument("n must be >= 1, got " + s);
    return v;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> parse_n_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const auto v = parse_positive(s);
        return {v, v};
    }
    const auto first = parse_positive(s.substr(0, dots));
    const auto last = parse_positive(s.substr(dots + 2));
    if (last < first) throw std::invalid_argument("empty range " + s);
    return {first, last};
}

std::vector<TableRow> table_rows(int rank, std::int64_t n_first, std::int64_t n_last, TableTarget target) {
    std::vector<TableRow> rows;
    for (std::int64_t n = n_first; n <= n_last; ++n) {
        const TwistCount tn(n);
        if (target == TableTarget::rep) {
            rows.push_back({n, rep_variety_epoly_formula(rank, tn), rep_variety_epoly_strata(rank, tn)});
        } else {
            rows.push_back({n, char_variety_epoly_formula(rank, tn),
                            char_piece_epoly(CharPiece::make(rank, CharPieceKind::total), tn)});
        }
    }
    return rows;
}

namespace {

std::int64_t narrow(Int v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("value " + to_string(v) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

}  // namespace

std::vector<std::int64_t> descending_int64(const Poly& p) {
    std::vector<std::int64_t> out;
    for (Int c : p.descending()) out.push_back(narrow(c));
    return out;
}

std::string render_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "n,degree,coefficients,eval_q2\n";
    for (const auto& row : rows) {
        out << row.n << ',' << row.formula.degree() << ",\"";
        const auto coeffs = row.formula.descending();
        for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? "," : "") << to_string(coeffs[i]);
        out << "\"," << to_string(row.formula.eval(2)) << '\n';
    }
    return out.str();
}

std::string render_json(int rank, TableTarget target, const std::vector<TableRow>& rows) {
    // One row per line keeps the output diffable.
    std::ostringstream out;
    out << "{\"rank\":" << rank << ",\"target\":\"" << (target == TableTarget::rep ? "rep" : "char")
        << "\",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        nlohmann::ordered_json r;
        r["n"] = row.n;
        r["degree"] = row.formula.degree();
        r["coefficients"] = descending_int64(row.formula);
        r["eval_q2"] = narrow(row.formula.eval(2));
        r[target == TableTarget::rep ? "strata" : "pieces"] = descending_int64(row.assembled);
        r["formula"] = descending_int64(row.formula);
        r["match"] = row.match();
        out << (i ? ",\n  " : "\n  ") << r.dump();
    }
    out << "\n]}\n";
    return out.str();
}

std::string render_latex(int rank, TableTarget target, const std::vector<TableRow>& rows) {
    const std::string lhs = target == TableTarget::rep ? "e(R(H_{" : "e(\\mathfrak{M}(H_{";
    std::ostringstream out;
    out << "\\begin{align*}\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << "  " << lhs << rows[i].n << "}, \\mathrm{SL}_{" << rank << "})) &= " << rows[i].formula.to_latex();
        out << (i + 1 < rows.size() ? " \\\\\n" : "\n");
    }
    out << "\\end{align*}\n";
    return out.str();
}

}  // namespace hopf
