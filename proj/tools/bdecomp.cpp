// bdecomp: command-line front end. Every subcommand writes one CSV or JSON
// document, to stdout or --out. Exit codes: 0 ok, 1 computation failure,
// 2 usage error.

#include "bdecomp/asymptotics.hpp"
#include "bdecomp/bases.hpp"
#include "bdecomp/benchmark.hpp"
#include "bdecomp/eigen.hpp"
#include "bdecomp/io.hpp"
#include "bdecomp/lebesgue.hpp"
#include "bdecomp/operators.hpp"
#include "bdecomp/quadrature.hpp"
#include "bdecomp/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace bdecomp;
using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::string format = "csv";
    std::string out;
    unsigned bits = ApproxReal::default_bits;
    double tol = 1e-8;
    std::size_t grid = 201;
};

struct Output {
    io::Format format = io::Format::Csv;
    io::CsvTable table;
    json document;
};

void require(bool ok, const std::string& message)
{
    if (!ok) {
        throw UsageError(message);
    }
}

OperatorKind parse_op(const std::string& name)
{
    const auto kind = parse_operator_kind(name);
    require(kind.has_value() && *kind != OperatorKind::Composite, "unknown operator: " + name);
    return *kind;
}

void require_increasing(const std::vector<unsigned>& ns, const char* what)
{
    require(!ns.empty(), std::string(what) + ": empty n list");
    for (std::size_t i = 0; i < ns.size(); ++i) {
        require(ns[i] >= 1, std::string(what) + ": n must be >= 1");
        require(i == 0 || ns[i] > ns[i - 1], std::string(what) + ": n list must be strictly increasing");
    }
}

json report_json(const ConvergenceReport& r) { return io::to_json(r); }

// ---------------------------------------------------------------- monomials

struct MonomialsArgs {
    std::string op = "F";
    unsigned n = 0;
    std::optional<unsigned> j;
};

void run_monomials(const MonomialsArgs& a, Output& out)
{
    const OperatorKind kind = parse_op(a.op);
    require(a.n >= 1, "--n must be >= 1");
    require(!a.j || *a.j <= a.n, "--j must not exceed --n");
    const OperatorMatrix op = operator_matrix(kind, a.n);
    const std::size_t width = a.n + 1;

    out.table.comments.push_back(io::operator_comment(to_string(kind), a.n));
    out.table.comments.push_back("row j lists the coefficients of the image of x^j");
    out.table.header = {"j"};
    for (const auto& h : io::coefficient_header(width)) {
        out.table.header.push_back(h);
    }
    for (unsigned j = 0; j <= a.n; ++j) {
        if (a.j && *a.j != j) {
            continue;
        }
        std::vector<std::string> row{std::to_string(j)};
        for (auto& c : io::coefficient_cells(op.image_of_monomial(j), width)) {
            row.push_back(std::move(c));
        }
        out.table.rows.push_back(std::move(row));
    }

    if (a.j) {
        out.document = {{"operator", std::string(to_string(kind))},
                        {"n", a.n},
                        {"basis", "monomial"},
                        {"j", *a.j},
                        {"image", io::to_json(op.image_of_monomial(*a.j))}};
    } else {
        out.document = io::to_json(op);
    }
}

// ---------------------------------------------------------------- moments

struct MomentsArgs {
    unsigned n = 0;
    unsigned m = 6;
};

void run_moments(const MomentsArgs& a, Output& out)
{
    require(a.n >= 1, "--n must be >= 1");
    const std::size_t width = a.m + 1;
    out.table.comments.push_back(io::operator_comment("F", a.n));
    out.table.comments.push_back("row m lists the coefficients of M_{n,m}(x) = F_n((t-x)^m; x)");
    out.table.header = {"m"};
    for (const auto& h : io::coefficient_header(width)) {
        out.table.header.push_back(h);
    }
    json moments = json::array();
    for (unsigned m = 0; m <= a.m; ++m) {
        const Polynomial p = central_moment(a.n, m);
        std::vector<std::string> row{std::to_string(m)};
        for (auto& c : io::coefficient_cells(p, width)) {
            row.push_back(std::move(c));
        }
        out.table.rows.push_back(std::move(row));
        moments.push_back({{"m", m}, {"moment", io::to_json(p)}});
    }
    out.document = {{"operator", "F"}, {"n", a.n}, {"basis", "monomial"}, {"moments", std::move(moments)}};
}

// ---------------------------------------------------------------- eigen

struct EigenArgs {
    std::string op = "bernstein";
    unsigned n = 0;
    std::optional<unsigned> k;
    bool limit = false;
};

void run_eigen(const EigenArgs& a, Output& out)
{
    if (a.limit) {
        const unsigned kmax = a.k.value_or(6);
        const std::size_t width = kmax + 1;
        out.table.comments.push_back("limit eigenpolynomials p_k^* basis=monomial");
        out.table.header = {"k"};
        for (const auto& h : io::coefficient_header(width)) {
            out.table.header.push_back(h);
        }
        json polys = json::array();
        for (unsigned k = 0; k <= kmax; ++k) {
            const Polynomial p = limit_eigenpolynomial(k);
            std::vector<std::string> row{std::to_string(k)};
            for (auto& c : io::coefficient_cells(p, width)) {
                row.push_back(std::move(c));
            }
            out.table.rows.push_back(std::move(row));
            polys.push_back({{"k", k}, {"eigenpolynomial", io::to_json(p)}});
        }
        out.document = {{"basis", "monomial"}, {"limits", std::move(polys)}};
        return;
    }

    const OperatorKind kind = parse_op(a.op);
    require(a.n >= 1, "--n must be >= 1");
    require(!a.k || *a.k <= a.n, "--k must not exceed --n");
    const std::size_t width = a.n + 1;
    out.table.comments.push_back(io::operator_comment(to_string(kind), a.n));
    out.table.comments.push_back("monic eigenpolynomials; row k holds eigenvalue and coefficients");
    out.table.header = {"k", "eigenvalue"};
    for (const auto& h : io::coefficient_header(width)) {
        out.table.header.push_back(h);
    }
    json pairs = json::array();
    for (unsigned k = 0; k <= a.n; ++k) {
        if (a.k && *a.k != k) {
            continue;
        }
        const EigenPair e = eigenpair(kind, a.n, k);
        std::vector<std::string> row{std::to_string(k), io::decimal(e.eigenvalue)};
        for (auto& c : io::coefficient_cells(e.eigenpolynomial, width)) {
            row.push_back(std::move(c));
        }
        out.table.rows.push_back(std::move(row));
        pairs.push_back(io::to_json(e));
    }
    out.document = {{"operator", std::string(to_string(kind))}, {"n", a.n}, {"basis", "monomial"}, {"pairs", std::move(pairs)}};
}

// ---------------------------------------------------------------- basis

struct BasisArgs {
    unsigned n = 0;
    std::string family = "phi";
    std::optional<unsigned> i;
    bool curve = false;
};

void run_basis(const BasisArgs& a, const GlobalOptions& g, Output& out)
{
    require(a.n >= 1, "--n must be >= 1");
    require(a.family == "phi" || a.family == "rho", "--family must be phi or rho");
    require(!a.i || *a.i <= a.n, "--i must not exceed --n");
    std::vector<unsigned> indices;
    for (unsigned i = 0; i <= a.n; ++i) {
        if (!a.i || *a.i == i) {
            indices.push_back(i);
        }
    }
    std::vector<Polynomial> polys;
    for (unsigned i : indices) {
        polys.push_back(a.family == "phi" ? phi_basis(a.n, i) : rho_basis(a.n, i));
    }
    const std::string name = a.family == "phi" ? "phi" : "rho";
    out.table.comments.push_back("family=" + name + " n=" + std::to_string(a.n) + " basis=monomial");

    if (a.curve) {
        require(g.grid >= 2, "--grid must be >= 2");
        out.table.header = {"x"};
        for (unsigned i : indices) {
            out.table.header.push_back(name + "_" + std::to_string(i));
        }
        json xs = json::array();
        json columns = json::array();
        std::vector<std::vector<double>> values(polys.size());
        const long last = static_cast<long>(g.grid - 1);
        for (long p = 0; p <= last; ++p) {
            const Rational x = make_rational(p, last);
            std::vector<std::string> row{io::decimal(x)};
            xs.push_back(Rational(x).get_d());
            for (std::size_t q = 0; q < polys.size(); ++q) {
                const Rational v = polys[q](x);
                row.push_back(io::decimal(v));
                values[q].push_back(v.get_d());
            }
            out.table.rows.push_back(std::move(row));
        }
        for (std::size_t q = 0; q < polys.size(); ++q) {
            columns.push_back({{"i", indices[q]}, {"values", values[q]}});
        }
        out.document = {{"family", name}, {"n", a.n}, {"x", std::move(xs)}, {"curves", std::move(columns)}};
        return;
    }

    const std::size_t width = a.n + 1;
    out.table.header = {"i"};
    for (const auto& h : io::coefficient_header(width)) {
        out.table.header.push_back(h);
    }
    json list = json::array();
    for (std::size_t q = 0; q < polys.size(); ++q) {
        std::vector<std::string> row{std::to_string(indices[q])};
        for (auto& c : io::coefficient_cells(polys[q], width)) {
            row.push_back(std::move(c));
        }
        out.table.rows.push_back(std::move(row));
        list.push_back({{"i", indices[q]}, {"polynomial", io::to_json(polys[q])}});
    }
    out.document = {{"family", name}, {"n", a.n}, {"basis", "monomial"}, {"polynomials", std::move(list)}};
}

// ---------------------------------------------------------------- lebesgue

struct LebesgueArgs {
    std::vector<unsigned> n;
    bool max = false;
    std::size_t scan = 2001;
};

void run_lebesgue(const LebesgueArgs& a, const GlobalOptions& g, Output& out)
{
    std::vector<unsigned> ns = a.n;
    if (ns.empty()) {
        require(a.max, "--n is required for the curve");
        ns = {10, 20, 30, 40, 50, 60, 70};
    }
    require_increasing(ns, "lebesgue");
    require(g.bits >= 64, "--bits must be >= 64");

    if (a.max) {
        require(a.scan >= 3, "--scan must be >= 3");
        LebesgueProtocol protocol;
        protocol.scan_points = a.scan;
        protocol.bits = g.bits;
        out.table.comments.push_back("Lebesgue function maxima; scan=" + std::to_string(a.scan) +
                                     " bits=" + std::to_string(g.bits) + " golden-section to 1e-7");
        out.table.header = {"n", "argmax", "max"};
        json rows = json::array();
        for (unsigned n : ns) {
            const LebesgueMax m = lebesgue_max(n, protocol);
            out.table.rows.push_back({std::to_string(n), io::decimal(m.argmax), io::decimal(m.max)});
            rows.push_back({{"n", n}, {"argmax", m.argmax.to_double()}, {"max", m.max.to_double()}, {"max_decimal", io::decimal(m.max, 20)}});
        }
        out.document = {{"scan_points", a.scan}, {"bits", g.bits}, {"maxima", std::move(rows)}};
        return;
    }

    require(ns.size() == 1, "the curve takes a single --n");
    require(g.grid >= 2, "--grid must be >= 2");
    const unsigned n = ns.front();
    out.table.comments.push_back("Lebesgue function n=" + std::to_string(n) + " bits=" + std::to_string(g.bits));
    out.table.header = {"x", "psi"};
    json xs = json::array();
    json ys = json::array();
    for (const auto& [x, psi] : lebesgue_curve(n, g.grid, g.bits)) {
        out.table.rows.push_back({io::decimal(x), io::decimal(psi)});
        xs.push_back(x);
        ys.push_back(psi.to_double());
    }
    out.document = {{"n", n}, {"bits", g.bits}, {"x", std::move(xs)}, {"psi", std::move(ys)}};
}

// ---------------------------------------------------------------- voronovskaya

struct VoronovskayaArgs {
    std::optional<unsigned> m;
    std::vector<unsigned> n{100, 1000};
    double max_ratio = 0.2;
};

void add_report_rows(Output& out, const std::string& key, const ConvergenceReport& r)
{
    for (const auto& s : r.samples) {
        out.table.rows.push_back({key, std::to_string(s.n), io::decimal(s.error), r.pass ? "pass" : "fail"});
    }
}

void run_voronovskaya(const VoronovskayaArgs& a, const GlobalOptions& g, Output& out)
{
    require_increasing(a.n, "voronovskaya");
    require(a.max_ratio > 0, "--max-ratio must be positive");
    std::vector<unsigned> ms;
    if (a.m) {
        ms.push_back(*a.m);
    } else {
        ms = {2, 3, 4, 5, 6};
    }
    for (unsigned m : ms) {
        require(a.n.front() >= m, "every n must be at least m");
    }
    out.table.comments.push_back("sup-grid error of n^2 (F_n e_m - e_m) against V(e_m); grid=" + std::to_string(g.grid) +
                                 " max_ratio=" + io::decimal(a.max_ratio));
    out.table.header = {"m", "n", "error", "verdict"};
    json reports = json::array();
    for (unsigned m : ms) {
        const ConvergenceReport r =
            voronovskaya_convergence(Polynomial::monomial(m), a.n, {a.max_ratio, 0.0}, g.grid, g.bits);
        add_report_rows(out, std::to_string(m), r);
        json j = report_json(r);
        j["m"] = m;
        reports.push_back(std::move(j));
    }
    out.document = {{"grid", g.grid}, {"reports", std::move(reports)}};
}

// ---------------------------------------------------------------- limits

struct LimitsArgs {
    std::optional<unsigned> k;
    std::vector<unsigned> n{100, 1000};
};

void run_limits(const LimitsArgs& a, const GlobalOptions& g, Output& out)
{
    require_increasing(a.n, "limits");
    std::vector<unsigned> ks;
    if (a.k) {
        ks.push_back(*a.k);
    } else {
        ks = {0, 1, 2, 3, 4, 5};
    }
    for (unsigned k : ks) {
        require(k <= a.n.front(), "every n must be at least k");
    }
    out.table.comments.push_back("eigenpolynomial limits; grid=" + std::to_string(g.grid) +
                                 " rate band [0.05, 0.2], image band [0, 0.2]");
    out.table.header = {"quantity", "n", "error", "verdict"};
    json reports = json::array();
    for (unsigned k : ks) {
        const EigenLimitReport r = f_on_eigen_limit(k, a.n, {0.2, 0.05}, g.grid, g.bits);
        const std::string suffix = " k=" + std::to_string(k);
        add_report_rows(out, "beta_inv_image" + suffix, r.beta_inverse_image);
        add_report_rows(out, "f_image" + suffix, r.f_image);
        add_report_rows(out, "beta_inv_rate" + suffix, r.beta_inverse_rate);
        add_report_rows(out, "f_rate" + suffix, r.f_rate);
        json lambda = json::array();
        for (const auto& [n, v] : r.lambda_rate) {
            const Rational diff = abs(v - r.lambda_limit);
            out.table.rows.push_back({"lambda_rate" + suffix, std::to_string(n), io::decimal(diff), diff <= Rational(1, 100) ? "pass" : "fail"});
            lambda.push_back({{"n", n}, {"value", io::to_json(v)}, {"limit", io::to_json(r.lambda_limit)}});
        }
        reports.push_back({{"k", k},
                           {"beta_inverse_image", report_json(r.beta_inverse_image)},
                           {"f_image", report_json(r.f_image)},
                           {"beta_inverse_rate", report_json(r.beta_inverse_rate)},
                           {"f_rate", report_json(r.f_rate)},
                           {"lambda_rate", std::move(lambda)}});
    }
    out.document = {{"grid", g.grid}, {"reports", std::move(reports)}};
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    bool quick = false;
};

bool run_verify(const VerifyArgs& a, Output& out)
{
    VerifyOptions options;
    if (a.quick) {
        options.decomposition_max_n = 20;
        options.two_route_max_n = 8;
        options.symmetry_max_n = 12;
        options.square_max_n = 12;
        options.random_matrix_max = 12;
        options.include_limits = false;
    }
    const std::vector<CheckResult> results = run_exact_identities(options);
    bool all = true;
    out.table.comments.push_back(std::string("exact identity suite") + (a.quick ? " (quick ranges)" : ""));
    out.table.header = {"check", "verdict", "detail"};
    json list = json::array();
    for (const CheckResult& r : results) {
        all = all && r.pass;
        out.table.rows.push_back({r.name, r.pass ? "pass" : "fail", r.detail});
        list.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    out.document = {{"checks", std::move(list)}, {"pass", all}};
    return all;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
    std::vector<unsigned> n{5, 10, 20, 50};
};

void run_bench(const BenchArgs& a, const GlobalOptions& g, Output& out)
{
    require_increasing(a.n, "bench");
    require(g.grid >= 2, "--grid must be >= 2");
    out.table.comments.push_back("F_n vs B_n errors on a uniform grid of " + std::to_string(g.grid) +
                                 " points; l2 = trapezoidal discrete L2 norm");
    out.table.header = {"function", "n", "sup_F", "sup_B", "l2_F", "l2_B"};
    json rows = json::array();
    for (const BenchmarkFunction& f : default_benchmark_functions()) {
        for (const BenchmarkRow& r : benchmark_errors(f, a.n, g.grid)) {
            out.table.rows.push_back({r.function, std::to_string(r.n), io::decimal(r.sup_f), io::decimal(r.sup_b),
                                      io::decimal(r.l2_f), io::decimal(r.l2_b)});
            rows.push_back({{"function", r.function}, {"n", r.n}, {"sup_F", r.sup_f}, {"sup_B", r.sup_b}, {"l2_F", r.l2_f}, {"l2_B", r.l2_b}});
        }
    }
    out.document = {{"grid", g.grid}, {"rows", std::move(rows)}};
}

// ---------------------------------------------------------------- contradiction

bool run_contradiction(const GlobalOptions& g, Output& out)
{
    require(g.tol > 0 && g.tol <= 1e-4, "--tol must lie in (0, 1e-4]");
    const ContradictionReport r = g2_contradiction_check(g.tol);
    out.table.comments.push_back("Beta_2 applied to the hat function at knot 1 (value 1 at x = 1), evaluated at x = 1/4");
    out.table.header = {"quantity", "value"};
    out.table.rows = {
        {"quadrature", io::decimal(r.quadrature_value)},
        {"closed_form", io::decimal(r.closed_form)},
        {"bernstein_value", io::decimal(r.bernstein_value)},
        {"distance", io::decimal(r.distance)},
        {"matches_closed_form", r.matches_closed_form ? "true" : "false"},
        {"contradiction", r.contradiction ? "true" : "false"},
        {"phi_route_value", io::decimal(r.phi_route_value)},
        {"phi_route_difference", io::decimal(r.phi_route_difference)},
    };
    json sandwich = json::array();
    for (const SandwichRow& s : r.sandwich) {
        out.table.rows.push_back({"sandwich n=" + std::to_string(s.n) + " power=" + std::to_string(s.power) + " x=" + io::decimal(s.x),
                                  io::decimal(s.lower) + " <= " + io::decimal(s.value) + " <= " + io::decimal(s.upper)});
        sandwich.push_back({{"n", s.n}, {"power", s.power}, {"x", s.x}, {"lower", s.lower}, {"value", s.value}, {"upper", s.upper}, {"pass", s.pass}});
    }
    out.document = {{"tol", r.tol},
                    {"quadrature", r.quadrature_value.to_double()},
                    {"closed_form", r.closed_form.to_double()},
                    {"bernstein_value", r.bernstein_value},
                    {"distance", r.distance},
                    {"matches_closed_form", r.matches_closed_form},
                    {"contradiction", r.contradiction},
                    {"phi_route_value", r.phi_route_value},
                    {"phi_route_difference", r.phi_route_difference},
                    {"sandwich", std::move(sandwich)},
                    {"pass", r.pass}};
    return r.pass;
}

void emit(const Output& out, const GlobalOptions& g)
{
    std::ostringstream text;
    if (out.format == io::Format::Json) {
        text << out.document.dump(2) << '\n';
    } else {
        out.table.write(text);
    }
    if (g.out.empty()) {
        std::cout << text.str();
        return;
    }
    std::ofstream file(g.out, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open " + g.out);
    }
    file << text.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact and extended-precision computations for Bernstein, Beta and related operators"};
    app.fallthrough();
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", g.out, "Output file (default stdout)");
    app.add_option("--bits", g.bits, "Floating precision in bits")->capture_default_str();
    app.add_option("--tol", g.tol, "Quadrature tolerance")->capture_default_str();
    app.add_option("--grid", g.grid, "Grid points on [0,1], endpoints included")->capture_default_str();

    MonomialsArgs monomials;
    auto* cmd_monomials = app.add_subcommand("monomials", "Images of x^j under an operator");
    cmd_monomials->add_option("--op", monomials.op, "bernstein|beta|beta-inv|F|stancu|durrmeyer|durrmeyer-inv")->capture_default_str();
    cmd_monomials->add_option("--n", monomials.n, "Degree")->required();
    cmd_monomials->add_option("--j", monomials.j, "Single monomial index");

    MomentsArgs moments;
    auto* cmd_moments = app.add_subcommand("moments", "Central moments M_{n,m} of F_n");
    cmd_moments->add_option("--n", moments.n, "Degree")->required();
    cmd_moments->add_option("--m", moments.m, "Largest order")->capture_default_str();

    EigenArgs eigen;
    auto* cmd_eigen = app.add_subcommand("eigen", "Eigenvalues and monic eigenpolynomials, or their limits");
    cmd_eigen->add_option("--op", eigen.op, "Operator")->capture_default_str();
    cmd_eigen->add_option("--n", eigen.n, "Degree");
    cmd_eigen->add_option("--k", eigen.k, "Single index (with --limit: largest index, default 6)");
    cmd_eigen->add_flag("--limit", eigen.limit, "Limit eigenpolynomials p_k^*");

    BasisArgs basis;
    auto* cmd_basis = app.add_subcommand("basis", "phi_{n,i} or rho_{n,j} tables and curves");
    cmd_basis->add_option("--n", basis.n, "Degree")->required();
    cmd_basis->add_option("--family", basis.family, "phi|rho")->capture_default_str();
    cmd_basis->add_option("--i,--j", basis.i, "Single index");
    cmd_basis->add_flag("--curve", basis.curve, "Values on the grid instead of coefficients");

    LebesgueArgs lebesgue;
    auto* cmd_lebesgue = app.add_subcommand("lebesgue", "Lebesgue function curve or maxima");
    cmd_lebesgue->add_option("--n", lebesgue.n, "Degree(s)");
    cmd_lebesgue->add_flag("--max", lebesgue.max, "Maximum instead of the curve");
    cmd_lebesgue->add_option("--scan", lebesgue.scan, "Scan points for --max")->capture_default_str();

    VoronovskayaArgs voronovskaya;
    auto* cmd_vor = app.add_subcommand("voronovskaya", "n^2 (F_n e_m - e_m) against its limit");
    cmd_vor->add_option("--m", voronovskaya.m, "Monomial degree (default 2..6)");
    cmd_vor->add_option("--n", voronovskaya.n, "Increasing n values")->capture_default_str();
    cmd_vor->add_option("--max-ratio", voronovskaya.max_ratio, "Allowed error ratio between consecutive n")->capture_default_str();

    LimitsArgs limits;
    auto* cmd_limits = app.add_subcommand("limits", "Limits of Beta_n^-1 and F_n on the eigenpolynomials of B_n");
    cmd_limits->add_option("--k", limits.k, "Index (default 0..5)");
    cmd_limits->add_option("--n", limits.n, "Increasing n values")->capture_default_str();

    VerifyArgs verify;
    auto* cmd_verify = app.add_subcommand("verify", "Exact identity suite; exit 1 on any failure");
    cmd_verify->add_flag("--quick", verify.quick, "Reduced ranges, no limit checks");

    BenchArgs bench;
    auto* cmd_bench = app.add_subcommand("bench", "F_n vs B_n approximation errors");
    cmd_bench->add_option("--n", bench.n, "Increasing n values")->capture_default_str();

    auto* cmd_contradiction = app.add_subcommand("contradiction", "Numerical check that G_2 differs from B_2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Output out;
        out.format = *io::parse_format(g.format);
        bool ok = true;
        if (cmd_monomials->parsed()) {
            run_monomials(monomials, out);
        } else if (cmd_moments->parsed()) {
            run_moments(moments, out);
        } else if (cmd_eigen->parsed()) {
            run_eigen(eigen, out);
        } else if (cmd_basis->parsed()) {
            run_basis(basis, g, out);
        } else if (cmd_lebesgue->parsed()) {
            run_lebesgue(lebesgue, g, out);
        } else if (cmd_vor->parsed()) {
            run_voronovskaya(voronovskaya, g, out);
        } else if (cmd_limits->parsed()) {
            run_limits(limits, g, out);
        } else if (cmd_verify->parsed()) {
            ok = run_verify(verify, out);
        } else if (cmd_bench->parsed()) {
            run_bench(bench, g, out);
        } else if (cmd_contradiction->parsed()) {
            ok = run_contradiction(g, out);
        }
        emit(out, g);
        return ok ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
