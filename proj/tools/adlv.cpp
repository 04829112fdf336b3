// adlv: dimensions of affine Deligne-Lusztig varieties for Res_{k'/k} GL_h
// with superbasic b, via the chart combinatorics and the closed formula.

#include "adlv/errors.hpp"
#include "adlv/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using namespace adlv;

constexpr int kExitSuiteFailure = 1;
constexpr int kExitKappa = 2;
constexpr int kExitMazur = 3;
constexpr int kExitInvalid = 4;
constexpr int kExitInternal = 5;

GCocharacter parse_mu(const std::string& text, int d, int h) {
    auto flat = parse_int_vector(text);
    if (flat.size() != static_cast<size_t>(d) * h)
        throw std::invalid_argument("--mu needs d*h row-major integers");
    GCocharacter mu(d, h);
    for (int tau = 0; tau < d; ++tau)
        for (int i = 0; i < h; ++i) mu.rows[tau][i] = flat[tau * h + i];
    if (!mu.is_dominant()) throw std::invalid_argument("--mu must be dominant (rows increasing)");
    return mu;
}

SuperbasicDatum build_datum(const GCocharacter& mu, const std::string& slopes_text,
                            std::optional<Int> m_flag) {
    if (!slopes_text.empty()) {
        auto slopes = parse_int_vector(slopes_text);
        SuperbasicDatum datum(mu.d, mu.h, slopes);
        if (m_flag && *m_flag != datum.m)
            throw std::invalid_argument("--m contradicts --slopes");
        return datum;
    }
    SuperbasicDatum datum = datum_from_mu(mu);
    if (m_flag && *m_flag != datum.m)
        throw KappaMismatchError("Kottwitz mismatch: --m differs from the entry sum of mu");
    return datum;
}

// Reports carry a stable "result" payload; timing sits outside it.
void emit_report(const std::string& command, const json& result, bool as_json, double ms) {
    if (as_json) {
        json doc;
        doc["command"] = command;
        doc["result"] = result;
        doc["timing_ms"] = ms;
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::cout << command << "\n";
    for (auto& [key, value] : result.items())
        std::cout << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
    std::cout << "  (" << ms << " ms)\n";
}

int cmd_dim(int d, int h, const std::string& mu_text, const std::string& slopes_text,
            std::optional<Int> m_flag, const std::string& newton_text, const std::string& method,
            bool as_json) {
    auto start = std::chrono::steady_clock::now();
    GCocharacter mu = parse_mu(mu_text, d, h);
    json result;
    if (!newton_text.empty()) {
        GeneralClassDatum datum(d, h, parse_rat_vector(newton_text));
        if (mu.total() != datum.kappa)
            throw KappaMismatchError("Kottwitz points differ: sum(mu) != kappa(nu)");
        Int dim = general_dim(mu, datum);  // MazurError when empty
        result["dimension"] = dim;
        result["method"] = "formula";
        result["kappa"] = datum.kappa;
    } else {
        SuperbasicDatum datum = build_datum(mu, slopes_text, m_flag);
        if (!kappa_match(mu, datum))
            throw KappaMismatchError("Kottwitz points differ: sum(mu) != m");
        RelCocharacter nu = newton_point(datum);
        result["m"] = datum.m;
        result["newton_slope"] = rat_str(nu[0]);
        if (method == "formula" || method == "both")
            result["dimension_formula"] = dim_formula(mu, nu, d);
        if (method == "enumerate" || method == "both") {
            auto res = enumerate_charts(mu, datum);
            result["dimension_enumerated"] = res.max_dim;
            result["chart_count"] = res.charts.size();
        }
        if (method == "both" &&
            result["dimension_formula"] != result["dimension_enumerated"]) {
            std::cerr << "internal disagreement: formula != enumeration\n";
            return kExitInternal;
        }
        result["dimension"] = method == "enumerate" ? result["dimension_enumerated"]
                                                    : result["dimension_formula"];
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    emit_report("dim", result, as_json, ms);
    return 0;
}

int cmd_enumerate(int d, int h, const std::string& mu_text, const std::string& slopes_text,
                  std::optional<Int> m_flag, const std::string& out_path) {
    GCocharacter mu = parse_mu(mu_text, d, h);
    SuperbasicDatum datum = build_datum(mu, slopes_text, m_flag);
    if (!kappa_match(mu, datum))
        throw KappaMismatchError("Kottwitz points differ: sum(mu) != m");
    auto res = enumerate_charts(mu, datum);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::invalid_argument("cannot open " + out_path);
        os = &file;
    }
    for (const auto& ext : res.charts) *os << chart_to_json_line(ext) << "\n";
    std::cerr << res.charts.size() << " charts, max |V| = " << res.max_dim << "\n";
    return 0;
}

int cmd_polygon(const std::string& nu1_text, const std::string& nu2_text,
                const std::string& out_path) {
    RelCocharacter v1 = parse_rat_vector(nu1_text);
    RelCocharacter v2 = parse_rat_vector(nu2_text);
    std::string svg = polygon_svg(v1, v2);  // throws on precondition failure
    Int count = lattice_points_between(v1, v2);
    if (count != pairing(v1, v2)) {
        std::cerr << "internal disagreement: dots != pairing\n";
        return kExitInternal;
    }
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw std::invalid_argument("cannot open " + out_path);
        file << svg;
    } else {
        std::cout << svg;
    }
    std::cerr << "lattice points: " << count << "\n";
    std::cout << count << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& grid) {
    verify::Options opt{grid == "full"};
    auto results = verify::run_suite(suite, opt);
    verify::print_results(std::cout, results);
    return verify::all_passed(results) ? 0 : kExitSuiteFailure;
}

int cmd_conjecture(int d, int h, const std::string& mu_text, const std::string& slopes_text,
                   std::optional<Int> m_flag, bool as_json) {
    auto start = std::chrono::steady_clock::now();
    GCocharacter mu = parse_mu(mu_text, d, h);
    SuperbasicDatum datum = build_datum(mu, slopes_text, m_flag);
    auto report = conjecture_report(mu, datum);  // rejects non-minuscule mu
    json result;
    result["mu"] = gcochar_to_json(mu);
    result["chart_count"] = report.chart_count;
    result["orbit_count"] = report.orbit_count;
    result["top_count"] = report.top_count;
    result["predicted_top"] = report.predicted_top;
    result["sandwich_all"] = report.sandwich_all;
    result["tilde_injective"] = report.tilde_injective;
    result["tilde_into_orbit_set"] = report.tilde_into_orbit_set;
    result["bijection_matches"] = report.bijection_matches;
    result["top_matches"] = report.top_matches;
    json images = json::array();
    for (const auto& image : report.tilde_images) images.push_back(gcochar_to_json(image));
    result["tilde_images"] = images;
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    emit_report("conjecture", result, as_json, ms);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extended EL-charts and dimensions of affine Deligne-Lusztig varieties"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // keep -h free for --h

    int d = 1, h = 2;
    std::string mu_text, slopes_text, newton_text, method = "formula", out_path;
    std::string suite = "all", grid = "full";
    std::string nu1_text, nu2_text;
    Int m_value = 0;
    bool as_json = false;

    auto add_instance_flags = [&](CLI::App* cmd, bool with_m) {
        cmd->add_option("--d", d, "number of Galois components")->required();
        cmd->add_option("--h", h, "rank of each GL factor")->required();
        cmd->add_option("--mu", mu_text, "dominant cocharacter, row-major integers")->required();
        cmd->add_option("--slopes", slopes_text, "slope tuple (m_tau), default: row sums of mu");
        if (with_m) cmd->add_option("--m", m_value, "total valuation (consistency check)");
    };

    auto* dim = app.add_subcommand("dim", "dimension of X_mu(b)");
    add_instance_flags(dim, true);
    dim->add_option("--newton", newton_text, "general Newton point (rationals, forces formula)");
    dim->add_option("--method", method, "formula | enumerate | both")
        ->check(CLI::IsMember({"formula", "enumerate", "both"}));
    dim->add_flag("--json", as_json, "machine-readable output");

    auto* enumerate = app.add_subcommand("enumerate", "list all extended EL-charts (JSON lines)");
    add_instance_flags(enumerate, true);
    enumerate->add_option("--out", out_path, "output path (default: stdout)");

    auto* polygon = app.add_subcommand("polygon", "SVG of two polygons with counted lattice points");
    polygon->add_option("--nu1", nu1_text, "upper vector (rationals)")->required();
    polygon->add_option("--nu2", nu2_text, "lower vector (integral)")->required();
    polygon->add_option("--out", out_path, "SVG output path (default: stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("--suite", suite, "metrics | charts | deformation | levi | components | all")
        ->check(CLI::IsMember({"metrics", "charts", "deformation", "levi", "components", "all"}));
    verify_cmd->add_option("--grid", grid, "small | full")
        ->check(CLI::IsMember({"small", "full"}));

    auto* conjecture = app.add_subcommand("conjecture", "minuscule component-count report");
    add_instance_flags(conjecture, true);
    conjecture->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInvalid;
    }

    std::optional<Int> m_flag;
    if (dim->count("--m") || enumerate->count("--m") || conjecture->count("--m"))
        m_flag = m_value;

    try {
        if (dim->parsed())
            return cmd_dim(d, h, mu_text, slopes_text, m_flag, newton_text, method, as_json);
        if (enumerate->parsed())
            return cmd_enumerate(d, h, mu_text, slopes_text, m_flag, out_path);
        if (polygon->parsed()) return cmd_polygon(nu1_text, nu2_text, out_path);
        if (verify_cmd->parsed()) return cmd_verify(suite, grid);
        if (conjecture->parsed())
            return cmd_conjecture(d, h, mu_text, slopes_text, m_flag, as_json);
    } catch (const adlv::KappaMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitKappa;
    } catch (const adlv::MazurError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMazur;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInvalid;
}
