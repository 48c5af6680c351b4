#include "bdecomp/io.hpp"

#include <cstdio>
#include <sstream>

namespace bdecomp::io {

std::optional<Format> parse_format(std::string_view text)
{
    if (text == "csv") {
        return Format::Csv;
    }
    if (text == "json") {
        return Format::Json;
    }
    return std::nullopt;
}

std::string decimal(const Rational& q, int significant) { return ApproxReal(q, ApproxReal::default_bits).to_string(significant); }

std::string decimal(const ApproxReal& v, int significant) { return v.to_string(significant); }

std::string decimal(double v, int significant)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*g", significant, v);
    return buffer;
}

nlohmann::json to_json(const Rational& q) { return to_string(q); }

nlohmann::json to_json(const Polynomial& p)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rational& c : p.coefficients()) {
        coeffs.push_back(to_string(c));
    }
    return coeffs;
}

nlohmann::json to_json(const OperatorMatrix& op)
{
    nlohmann::json columns = nlohmann::json::array();
    for (std::size_t j = 0; j < op.matrix.cols(); ++j) {
        columns.push_back(to_json(op.image_of_monomial(j)));
    }
    return {
        {"operator", std::string(to_string(op.kind))},
        {"n", op.n},
        {"basis", "monomial"},
        {"convention", "column j lists the coefficients of the image of x^j"},
        {"columns", std::move(columns)},
    };
}

nlohmann::json to_json(const Spectrum& s)
{
    nlohmann::json values = nlohmann::json::array();
    for (const Rational& v : s.values) {
        values.push_back(to_json(v));
    }
    return {{"operator", std::string(to_string(s.kind))}, {"n", s.n}, {"eigenvalues", std::move(values)}};
}

nlohmann::json to_json(const EigenPair& e)
{
    return {{"k", e.k}, {"eigenvalue", to_json(e.eigenvalue)}, {"eigenpolynomial", to_json(e.eigenpolynomial)}};
}

nlohmann::json to_json(const ConvergenceReport& r)
{
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : r.samples) {
        samples.push_back({{"n", s.n}, {"error", s.error.to_double()}, {"error_decimal", decimal(s.error)}});
    }
    nlohmann::json rate = r.rate_estimate ? nlohmann::json(r.rate_estimate->to_double()) : nlohmann::json(nullptr);
    return {
        {"label", r.label},
        {"target", to_json(r.target)},
        {"samples", std::move(samples)},
        {"band", {{"max_ratio", r.band.max_ratio}, {"min_ratio", r.band.min_ratio}}},
        {"rate_estimate", std::move(rate)},
        {"exact", r.exact},
        {"pass", r.pass},
    };
}

namespace {

// RFC 4180 quoting: fields with a comma, quote or line break are enclosed in
// quotes and embedded quotes doubled.
std::string csv_field(const std::string& cell)
{
    if (cell.find_first_of(",\"\n\r") == std::string::npos) {
        return cell;
    }
    std::string quoted = "\"";
    for (char c : cell) {
        quoted += c;
        if (c == '"') {
            quoted += '"';
        }
    }
    return quoted + '"';
}

} // namespace

void CsvTable::write(std::ostream& out) const
{
    for (const auto& c : comments) {
        out << "# " << c << '\n';
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << (i ? "," : "") << csv_field(cells[i]);
        }
        out << '\n';
    };
    if (!header.empty()) {
        line(header);
    }
    for (const auto& row : rows) {
        line(row);
    }
}

std::string CsvTable::str() const
{
    std::ostringstream out;
    write(out);
    return out.str();
}

std::string operator_comment(std::string_view op, unsigned n)
{
    return "operator=" + std::string(op) + " n=" + std::to_string(n) + " basis=monomial";
}

CsvTable convergence_csv(const ConvergenceReport& r)
{
    CsvTable t;
    t.comments.push_back(r.label);
    t.comments.push_back(std::string("pass=") + (r.pass ? "true" : "false"));
    t.header = {"n", "error"};
    for (const auto& s : r.samples) {
        t.rows.push_back({std::to_string(s.n), decimal(s.error)});
    }
    return t;
}

std::vector<std::string> coefficient_cells(const Polynomial& p, std::size_t width)
{
    std::vector<std::string> cells;
    for (const Rational& c : padded_coefficients(p, width)) {
        cells.push_back(decimal(c));
    }
    return cells;
}

std::vector<std::string> coefficient_header(std::size_t width)
{
    std::vector<std::string> h;
    for (std::size_t j = 0; j < width; ++j) {
        h.push_back("c" + std::to_string(j));
    }
    return h;
}

} // namespace bdecomp::io
