#include "adlv/io.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace adlv {

json chart_to_json(const ExtendedELChart& ext) {
    const ELChart& chart = ext.chart();
    json doc;
    doc["schema_version"] = "1";
    doc["d"] = chart.d();
    doc["h"] = chart.h();
    doc["slopes"] = chart.datum().slopes;
    json b = json::array();
    for (int tau = 0; tau < chart.d(); ++tau)
        for (Int g : chart.gens(tau)) b.push_back(json::array({tau, g}));
    doc["B"] = std::move(b);
    json phi = json::array();
    for (int tau = 0; tau < chart.d(); ++tau)
        for (const auto& [a, p] : ext.phi_low()[tau])
            phi.push_back(json::array({json::array({tau, a}), p}));
    doc["phi"] = std::move(phi);
    doc["type"] = gcochar_to_json(type_of(chart).type);
    doc["hodge"] = gcochar_to_json(hodge_point(ext));
    doc["cyclic"] = is_cyclic(ext);
    doc["v_dim"] = v_dim(ext);
    return doc;
}

std::string chart_to_json_line(const ExtendedELChart& ext) { return chart_to_json(ext).dump(); }

ExtendedELChart chart_from_json(const json& doc) {
    try {
        if (doc.at("schema_version").get<std::string>() != "1")
            throw std::invalid_argument("chart_from_json: unsupported schema_version");
        int d = doc.at("d").get<int>();
        int h = doc.at("h").get<int>();
        auto slopes = doc.at("slopes").get<std::vector<Int>>();
        SuperbasicDatum datum(d, h, slopes);
        std::vector<std::vector<Int>> gens(d);
        for (const auto& entry : doc.at("B")) {
            int tau = entry.at(0).get<int>();
            if (tau < 0 || tau >= d) throw std::invalid_argument("chart_from_json: bad tau");
            gens[tau].push_back(entry.at(1).get<Int>());
        }
        ELChart chart(datum, std::move(gens));
        std::vector<std::map<Int, Int>> tables(d);
        for (const auto& entry : doc.at("phi")) {
            int tau = entry.at(0).at(0).get<int>();
            if (tau < 0 || tau >= d) throw std::invalid_argument("chart_from_json: bad tau");
            tables[tau][entry.at(0).at(1).get<Int>()] = entry.at(1).get<Int>();
        }
        ExtendedELChart ext(std::move(chart), std::move(tables));
        auto violations = validate(ext);
        if (!violations.empty())
            throw std::invalid_argument("chart_from_json: axiom violation: " + violations.front());
        return ext;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("chart_from_json: malformed document: ") +
                                    e.what());
    }
}

ExtendedELChart chart_from_json_line(const std::string& line) {
    json doc;
    try {
        doc = json::parse(line);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("chart_from_json_line: parse error: ") + e.what());
    }
    return chart_from_json(doc);
}

json gcochar_to_json(const GCocharacter& mu) {
    json rows = json::array();
    for (const auto& r : mu.rows) rows.push_back(r);
    return rows;
}

GCocharacter gcochar_from_json(const json& doc) {
    std::vector<std::vector<Int>> rows;
    for (const auto& r : doc) rows.push_back(r.get<std::vector<Int>>());
    if (rows.empty()) throw std::invalid_argument("gcochar_from_json: empty");
    return GCocharacter(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()),
                        std::move(rows));
}

namespace {
double rat_to_double(const Rat& q) {
    return boost::multiprecision::numerator(q).convert_to<double>() /
           boost::multiprecision::denominator(q).convert_to<double>();
}
}  // namespace

std::string polygon_svg(const RelCocharacter& v1, const RelCocharacter& v2) {
    auto points = lattice_points_between_list(v1, v2);  // also checks preconditions
    Polygon p1(v1), p2(v2);
    const int h = p1.h;
    const double unit = 40.0;
    const double margin = 20.0;

    double y_max_units = 0;
    for (int x = 0; x <= h; ++x)
        y_max_units = std::max({y_max_units, rat_to_double(p1.at(x)), rat_to_double(p2.at(x))});
    Int grid_top = static_cast<Int>(y_max_units) + 1;

    double width = 2 * margin + h * unit;
    double height = 2 * margin + static_cast<double>(grid_top) * unit;
    auto px = [&](double x) { return margin + x * unit; };
    auto py = [&](double y) { return height - margin - y * unit; };  // y axis points up

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    for (int x = 0; x <= h; ++x)
        svg << "  <line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x)
            << "\" y2=\"" << py(static_cast<double>(grid_top)) << "\" stroke=\"#cccccc\" "
            << "stroke-width=\"1\"/>\n";
    for (Int y = 0; y <= grid_top; ++y)
        svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(static_cast<double>(y)) << "\" x2=\""
            << px(h) << "\" y2=\"" << py(static_cast<double>(y)) << "\" stroke=\"#cccccc\" "
            << "stroke-width=\"1\"/>\n";
    auto path = [&](const Polygon& p, const char* color) {
        svg << "  <path d=\"M " << px(0) << " " << py(rat_to_double(p.at(0)));
        for (int x = 1; x <= h; ++x) svg << " L " << px(x) << " " << py(rat_to_double(p.at(x)));
        svg << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    };
    path(p1, "#000000");
    path(p2, "#000000");
    for (auto& [x, y] : points)
        svg << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(static_cast<double>(y))
            << "\" r=\"4\" fill=\"#000000\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace adlv
