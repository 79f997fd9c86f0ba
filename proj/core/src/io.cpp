#include "teichlab/io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace teichlab {

using json = nlohmann::ordered_json;

namespace {

json complex_to_json(cxd z) { return json::array({z.real(), z.imag()}); }

cxd complex_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw io_error(std::string("expected [re, im] pair for ") + what);
    return {j[0].get<double>(), j[1].get<double>()};
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw io_error("malformed JSON");
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write " + path);
    out << text;
}

std::string series_to_json(const LaurentSeries& s) {
    json j;
    j["domain"] = s.domain() == SeriesDomain::Interior ? "interior" : "exterior";
    j["lo"] = s.lo();
    j["hi"] = s.hi();
    json coeffs = json::array();
    for (int p = s.lo(); p <= s.hi(); ++p) coeffs.push_back(complex_to_json(s.coeff(p)));
    j["coeffs"] = std::move(coeffs);
    if (s.exact_tail()) j["exact"] = true;
    return dump(j);
}

LaurentSeries series_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("domain") || !j.contains("lo") || !j.contains("hi") ||
        !j.contains("coeffs"))
        throw io_error("series: missing domain/lo/hi/coeffs");
    const std::string dom = j["domain"].get<std::string>();
    SeriesDomain d;
    if (dom == "interior")
        d = SeriesDomain::Interior;
    else if (dom == "exterior")
        d = SeriesDomain::Exterior;
    else
        throw io_error("series: domain must be \"interior\" or \"exterior\"");
    const int lo = j["lo"].get<int>(), hi = j["hi"].get<int>();
    if (!j["coeffs"].is_array()) throw io_error("series: coeffs must be an array");
    std::vector<cxd> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(complex_from_json(c, "coeffs"));
    const bool exact = j.value("exact", false);
    try {
        return LaurentSeries(d, lo, hi, std::move(coeffs), exact);
    } catch (const std::invalid_argument& e) {
        throw io_error(std::string("series: ") + e.what());
    }
}

LaurentSeries read_series(const std::string& path) {
    return series_from_json(read_text_file(path));
}

void write_series(const std::string& path, const LaurentSeries& s) {
    write_text_file(path, series_to_json(s));
}

std::string grunsky_to_json(const GrunskyMatrix& B) {
    json j;
    j["N"] = B.N;
    json entries = json::array();
    for (int m = 0; m < B.N; ++m)
        for (int n = 0; n < B.N; ++n) entries.push_back(complex_to_json(B.entries(m, n)));
    j["entries"] = std::move(entries);
    return dump(j);
}

std::string quad_diff_to_json(const QuadDiff& q) {
    json j;
    j["domain"] = q.domain() == PlanarDomain::Disk ? "disk" : "exterior";
    json terms = json::array();
    for (const auto& t : q.terms()) {
        json jt;
        switch (t.kind) {
            case QuadDiffTerm::Kind::Monomial:
                jt["kind"] = "monomial";
                jt["c"] = complex_to_json(t.c);
                jt["p"] = t.p;
                break;
            case QuadDiffTerm::Kind::Rho:
                jt["kind"] = "rho";
                jt["c"] = complex_to_json(t.c);
                if (t.e_infinite)
                    jt["e"] = "inf";
                else
                    jt["e"] = complex_to_json(t.e);
                break;
            case QuadDiffTerm::Kind::SimplePole:
                jt["kind"] = "pole";
                jt["c"] = complex_to_json(t.c);
                jt["e"] = complex_to_json(t.e);
                break;
            case QuadDiffTerm::Kind::HigherPole:
                jt["kind"] = "higher_pole";
                jt["c"] = complex_to_json(t.c);
                jt["e"] = complex_to_json(t.e);
                jt["order"] = t.order;
                break;
        }
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return dump(j);
}

QuadDiff quad_diff_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("domain") || !j.contains("terms"))
        throw io_error("quad_diff: missing domain/terms");
    const std::string dom = j["domain"].get<std::string>();
    PlanarDomain d;
    if (dom == "disk")
        d = PlanarDomain::Disk;
    else if (dom == "exterior")
        d = PlanarDomain::Exterior;
    else
        throw io_error("quad_diff: domain must be \"disk\" or \"exterior\"");
    std::vector<QuadDiffTerm> terms;
    for (const auto& jt : j["terms"]) {
        if (!jt.contains("kind")) throw io_error("quad_diff: term without kind");
        const std::string kind = jt["kind"].get<std::string>();
        QuadDiffTerm t;
        t.c = complex_from_json(jt.at("c"), "term c");
        if (kind == "monomial") {
            t.kind = QuadDiffTerm::Kind::Monomial;
            t.p = jt.at("p").get<int>();
        } else if (kind == "rho") {
            t.kind = QuadDiffTerm::Kind::Rho;
            if (jt.at("e").is_string() && jt["e"].get<std::string>() == "inf")
                t.e_infinite = true;
            else
                t.e = complex_from_json(jt["e"], "term e");
        } else if (kind == "pole") {
            t.kind = QuadDiffTerm::Kind::SimplePole;
            t.e = complex_from_json(jt.at("e"), "term e");
        } else if (kind == "higher_pole") {
            t.kind = QuadDiffTerm::Kind::HigherPole;
            t.e = complex_from_json(jt.at("e"), "term e");
            t.order = jt.at("order").get<int>();
        } else {
            throw io_error("quad_diff: unknown term kind " + kind);
        }
        terms.push_back(t);
    }
    try {
        return QuadDiff(d, std::move(terms));
    } catch (const std::invalid_argument& e) {
        throw io_error(std::string("quad_diff: ") + e.what());
    }
}

QuadDiff read_quad_diff(const std::string& path) {
    return quad_diff_from_json(read_text_file(path));
}

void write_quad_diff(const std::string& path, const QuadDiff& q) {
    write_text_file(path, quad_diff_to_json(q));
}

BeltramiField read_grid_field(const std::string& path) {
    json j = parse(read_text_file(path));
    if (!j.contains("grid_size") || !j.contains("spacing") || !j.contains("origin") ||
        !j.contains("samples"))
        throw io_error("grid field: missing grid_size/spacing/origin/samples");
    const int n = j["grid_size"].get<int>();
    const double h = j["spacing"].get<double>();
    const cxd origin = complex_from_json(j["origin"], "origin");
    const double half = n * h / 2.0;
    if (std::abs(origin.real() + half) > 1e-9 * half ||
        std::abs(origin.imag() + half) > 1e-9 * half)
        throw io_error("grid field: lattice must be centered on the origin");
    std::vector<cxd> samples;
    for (const auto& s : j["samples"]) samples.push_back(complex_from_json(s, "samples"));
    try {
        return BeltramiField::grid(GridSpec{half, n}, std::move(samples));
    } catch (const std::invalid_argument& e) {
        throw io_error(std::string("grid field: ") + e.what());
    }
}

void write_grid_field(const std::string& path, const BeltramiField& mu) {
    const GridSpec& g = mu.grid_spec();
    json j;
    j["grid_size"] = g.n;
    j["spacing"] = g.spacing();
    j["origin"] = json::array({-g.half_width, -g.half_width});
    json samples = json::array();
    for (const auto& s : mu.samples()) samples.push_back(complex_to_json(s));
    j["samples"] = std::move(samples);
    write_text_file(path, dump(j));
}

std::vector<cxd> read_points(const std::string& path) {
    json j = parse(read_text_file(path));
    if (!j.contains("points") || !j["points"].is_array())
        throw io_error("points: missing points array");
    std::vector<cxd> pts;
    for (const auto& p : j["points"]) {
        if (p.is_string() && p.get<std::string>() == "inf")
            pts.push_back(cxd(std::numeric_limits<double>::infinity(), 0.0));
        else
            pts.push_back(complex_from_json(p, "points"));
    }
    return pts;
}

std::string extremal_solution_to_json(const ExtremalSolution& sol) {
    json j;
    j["d"] = sol.d;
    json xi = json::array();
    for (const auto& x : sol.xi) xi.push_back(complex_to_json(x));
    j["xi"] = std::move(xi);
    j["kkt_residuals"] = sol.kkt_residuals;
    j["kkt_ok"] = sol.kkt_ok;
    j["restart_spread"] = sol.restart_spread;
    j["quadrature_report"] = {{"error_estimate", sol.d_quadrature.error_estimate},
                              {"cells", sol.d_quadrature.cells},
                              {"evals", sol.d_quadrature.evals},
                              {"converged", sol.d_quadrature.converged}};
    return dump(j);
}

std::string metric_samples_to_csv(const std::vector<MetricSample>& rows) {
    std::ostringstream out;
    out << "t_re,t_im,lower,upper,gap\n";
    out << std::setprecision(17);
    for (const auto& r : rows)
        out << r.t.real() << ',' << r.t.imag() << ',' << r.lower << ',' << r.upper << ','
            << r.gap << '\n';
    return out.str();
}

std::string metric_samples_summary_json(const std::vector<MetricSample>& rows) {
    double max_gap = 0.0, min_gap = 0.0;
    if (!rows.empty()) {
        max_gap = rows.front().gap;
        min_gap = rows.front().gap;
        for (const auto& r : rows) {
            max_gap = std::max(max_gap, r.gap);
            min_gap = std::min(min_gap, r.gap);
        }
    }
    json j;
    j["rows"] = rows.size();
    j["max_gap"] = max_gap;
    j["min_gap"] = min_gap;
    return dump(j);
}

}  // namespace teichlab
