#pragma once

#include "bdecomp/approx_real.hpp"
#include "bdecomp/asymptotics.hpp"
#include "bdecomp/eigen.hpp"
#include "bdecomp/operators.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace bdecomp::io {

enum class Format { Csv, Json };

std::optional<Format> parse_format(std::string_view text);

/// 12 significant digits, printf %g style ("0.025", "1.26600000000", "-7e-05").
std::string decimal(const Rational& q, int significant = 12);
std::string decimal(const ApproxReal& v, int significant = 12);
std::string decimal(double v, int significant = 12);

// JSON: exact rationals as "p/q" strings, polynomials as coefficient arrays
// indexed by power of x, floats as JSON numbers.
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const OperatorMatrix& op);
nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const EigenPair& e);
nlohmann::json to_json(const ConvergenceReport& r);

/// Comment lines ("# key=value"), one header row and data rows. Cells are
/// written verbatim, so callers format numbers with decimal().
struct CsvTable {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void write(std::ostream& out) const;
    std::string str() const;
};

/// Comment line naming operator, n and the monomial-basis convention.
std::string operator_comment(std::string_view op, unsigned n);

/// Two columns (n, error).
CsvTable convergence_csv(const ConvergenceReport& r);

/// Coefficient cells c0..c{width-1} in decimal, padded with "0".
std::vector<std::string> coefficient_cells(const Polynomial& p, std::size_t width);
std::vector<std::string> coefficient_header(std::size_t width);

} // namespace bdecomp::io
