// Command-line front end: one subcommand per computational pipeline,
// composition through files.  Exit codes: 0 success, 2 input error,
// 3 domain/precondition error, 4 numerical non-convergence.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <iostream>
#include <random>

#include <teichlab/beltrami_solver.hpp>
#include <teichlab/extremal.hpp>
#include <teichlab/families.hpp>
#include <teichlab/grunsky.hpp>
#include <teichlab/io.hpp>
#include <teichlab/metrics.hpp>
#include <teichlab/quadrature.hpp>
#include <teichlab/variation.hpp>

using json = nlohmann::ordered_json;
using namespace teichlab;

namespace {

struct RunConfig {
    int trunc = 64;
    double tol = 1e-8;
    int grid = 256;
    int restarts = 5;
    std::uint64_t seed = 12345;
    std::string out;
    std::string format = "json";
};

void apply_config_file(RunConfig& cfg, const std::string& path) {
    json j = json::parse(read_text_file(path), nullptr, false);
    if (j.is_discarded()) throw io_error("config: malformed JSON");
    cfg.trunc = j.value("trunc", cfg.trunc);
    cfg.tol = j.value("tol", cfg.tol);
    cfg.grid = j.value("grid", cfg.grid);
    cfg.restarts = j.value("restarts", cfg.restarts);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.out = j.value("out", cfg.out);
    cfg.format = j.value("format", cfg.format);
}

void validate_config(const RunConfig& cfg) {
    if (cfg.trunc <= 0 || cfg.grid <= 0 || cfg.restarts < 0)
        throw std::invalid_argument("config: numeric fields must be positive");
    if (!(cfg.tol > 0.0) || cfg.tol >= 1.0)
        throw std::invalid_argument("config: tol must lie in (0,1)");
    if (cfg.format != "json" && cfg.format != "csv")
        throw std::invalid_argument("config: format must be json or csv");
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty())
        std::cout << text;
    else
        write_text_file(cfg.out, text);
}

json complex_json(cxd z) { return json::array({z.real(), z.imag()}); }

// ---- grunsky ----------------------------------------------------------

int cmd_grunsky(const RunConfig& cfg, const std::string& series_file, bool dump_matrix) {
    LaurentSeries f = read_series(series_file);
    GrunskyMatrix B = grunsky_coefficients(f, cfg.trunc);
    GrunskyNormReport rep = grunsky_norm(B);
    json j;
    j["N"] = rep.N;
    j["norm"] = rep.value;
    j["norm_at_half_truncation"] = rep.value_half;
    j["converged"] = rep.converged;
    j["convergence_tolerance"] = rep.tolerance;
    double max_offdiag_asym = 0.0;
    for (int m = 1; m <= B.N; ++m)
        for (int n = m + 1; n <= B.N; ++n)
            max_offdiag_asym =
                std::max(max_offdiag_asym, std::abs(B.beta(m, n) - B.beta(n, m)));
    j["max_symmetry_defect"] = max_offdiag_asym;
    if (dump_matrix) j["matrix"] = json::parse(grunsky_to_json(B));
    emit(cfg, j.dump(2) + "\n");
    return 0;
}

// ---- coeff-bounds ------------------------------------------------------

int cmd_coeff_bounds(const RunConfig& cfg, int n_from, int n_to, double k) {
    if (n_to < n_from) throw std::invalid_argument("coeff-bounds: empty n range");
    json rows = json::array();
    std::string csv = "n,bound,admissible,kn_lower,kn_upper,crossing_residual\n";
    for (int n = n_from; n <= n_to; ++n) {
        auto [bound, admissible] = coeff_bound(n, k);
        json row;
        row["n"] = n;
        row["bound"] = bound;
        row["admissible"] = admissible;
        std::string kl = "", ku = "", cr = "";
        if (n >= 3) {
            KnBracket kb = kn_bracket(n);
            row["kn_lower"] = kb.lower;
            row["kn_upper"] = kb.upper;
            row["crossing_residual"] = kb.crossing_residual;
            row["competitor_loses"] = kb.competitor_loses;
            kl = std::to_string(kb.lower);
            ku = std::to_string(kb.upper);
            cr = std::to_string(kb.crossing_residual);
        }
        rows.push_back(row);
        csv += std::to_string(n) + "," + std::to_string(bound) + "," +
               (admissible ? "1" : "0") + "," + kl + "," + ku + "," + cr + "\n";
    }
    if (cfg.format == "csv") {
        emit(cfg, csv);
    } else {
        json j;
        j["k"] = k;
        j["rows"] = rows;
        emit(cfg, j.dump(2) + "\n");
    }
    return 0;
}

// ---- extremal ----------------------------------------------------------

int cmd_extremal(const RunConfig& cfg, const std::string& psi0_file,
                 const std::string& points_file) {
    QuadDiff psi0 = read_quad_diff(psi0_file);
    std::vector<cxd> pts = read_points(points_file);
    std::vector<QuadDiff> basis = rho_basis(pts);
    ExtremalSolution sol =
        l1_distance_to_span(psi0, basis, cfg.tol, cfg.restarts, cfg.seed);
    emit(cfg, extremal_solution_to_json(sol));
    if (!sol.kkt_ok)
        throw convergence_error("extremal: stationarity conditions not met at tolerance");
    return 0;
}

// ---- metric-sweep ------------------------------------------------------

std::vector<cxd> parse_t_grid(const std::string& spec, double phase) {
    // "start:stop:count" along the ray of the given phase
    double a = 0.0, b = 0.0;
    int count = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &a, &b, &count) != 3)
        throw std::invalid_argument("metric-sweep: t-grid must be start:stop:count");
    if (count <= 0) throw std::invalid_argument("metric-sweep: empty t grid");
    std::vector<cxd> grid;
    for (int i = 0; i < count; ++i) {
        const double r = count == 1 ? a : a + (b - a) * double(i) / double(count - 1);
        if (std::abs(r) >= 1.0)
            throw std::invalid_argument("metric-sweep: grid leaves the unit disk");
        grid.push_back(std::polar(r, phase));
    }
    return grid;
}

int cmd_metric_sweep(const RunConfig& cfg, const std::string& family, cxd param, int n,
                     const std::string& grid_spec, double phase) {
    std::vector<cxd> t_grid = parse_t_grid(grid_spec, phase);
    LaurentSeries f = LaurentSeries::identity(SeriesDomain::Exterior);
    std::function<double(cxd)> known_k;
    if (family == "b1_map") {
        if (std::abs(param) >= 1.0)
            throw std::invalid_argument("metric-sweep: |b| must be < 1 for b1_map");
        f = b1_map(param);
        const double b = std::abs(param);
        known_k = [b](cxd t) { return b * std::norm(t); };
    } else if (family == "koebe_qc") {
        const int order = std::max(cfg.trunc * 2 + 3, 16);
        f = sigma_from_s(koebe_qc(param, n, order));
        // first nonzero inverse-power coefficient sets the homotopy decay rate
        int m = 1;
        while (m < -f.lo() && std::abs(f.coeff(-m)) < 1e-14) ++m;
        const double kf = n == 1 ? std::norm(param) : std::abs(param);
        known_k = [kf, m](cxd t) { return kf * std::pow(std::abs(t), m + 1); };
    } else {
        throw std::invalid_argument("metric-sweep: family must be b1_map or koebe_qc");
    }
    std::vector<MetricSample> rows =
        geodesic_coincidence_experiment(f, known_k, t_grid, cfg.trunc);
    if (cfg.format == "csv")
        emit(cfg, metric_samples_to_csv(rows));
    else
        emit(cfg, metric_samples_summary_json(rows));
    return 0;
}

// ---- beltrami-solve ----------------------------------------------------

int cmd_beltrami_solve(const RunConfig& cfg, const std::string& mu_file, double constant,
                       double half_width) {
    BeltramiField mu = mu_file.empty()
                           ? sample_disk_field([constant](cxd) { return cxd(constant); },
                                               half_width, cfg.grid)
                           : read_grid_field(mu_file);
    SolverOptions opt;
    opt.tol = std::min(cfg.tol, 1e-10);
    BeltramiSolution sol = solve_beltrami(mu, opt);
    json j;
    j["iterations"] = sol.iterations;
    j["residual_sup"] = sol.residual_sup;
    j["grid_size"] = sol.grid.n;
    j["spacing"] = sol.grid.spacing();
    j["b0"] = complex_json(sol.exterior_fit.coeff(0));
    j["b1"] = complex_json(sol.exterior_fit.coeff(-1));
    j["fit"] = json::parse(series_to_json(sol.exterior_fit));
    emit(cfg, j.dump(2) + "\n");
    return 0;
}

// ---- variation-check ---------------------------------------------------

int cmd_variation_check(const RunConfig& cfg, int samples, int pairs) {
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss;
    json j;

    // first-order accuracy of the b1 functional against the solver
    const FunctionalSpec J = FunctionalSpec::coefficient(1);
    const std::vector<double> eps = {0.02, 0.01, 0.005};
    json slope_rows = json::array();
    for (int s = 0; s < samples; ++s) {
        cxd c0(gauss(rng), gauss(rng)), c1(gauss(rng), gauss(rng)),
            c2(gauss(rng), gauss(rng));
        auto base = [&](cxd z) {
            const double b = 1.0 - std::norm(z);
            return b * b * (c0 + c1 * z + c2 * std::conj(z));
        };
        std::vector<double> errs;
        for (double e : eps) {
            BeltramiField mu = sample_disk_field(
                [&](cxd z) { return e * base(z); }, 4.0, cfg.grid);
            BeltramiSolution sol = solve_beltrami(mu);
            const cxd exact = evaluate_functional(J, sol);
            const cxd fov = first_order_value(J, mu, cfg.tol);
            errs.push_back(std::abs(exact - fov));
        }
        // least-squares slope of log err against log eps
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < eps.size(); ++i) {
            const double x = std::log(eps[i]), y = std::log(std::max(errs[i], 1e-300));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double m = double(eps.size());
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        json row;
        row["errors"] = errs;
        row["slope"] = slope;
        slope_rows.push_back(row);
    }
    j["first_order_slopes"] = slope_rows;

    // norm-derivative formula against central finite differences
    double max_mismatch = 0.0;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int p = 0; p < pairs; ++p) {
        std::vector<QuadDiffTerm> pt, qt;
        auto mono = [&](cxd c, int pw) {
            QuadDiffTerm t;
            t.kind = QuadDiffTerm::Kind::Monomial;
            t.c = c;
            t.p = pw;
            return t;
        };
        pt.push_back(mono(cxd(2.0 + unif(rng), 0.0), 0));
        for (int d = 1; d <= 3; ++d) pt.push_back(mono(cxd(gauss(rng), gauss(rng)), d));
        qt.push_back(mono(cxd(gauss(rng), gauss(rng)), 0));
        for (int d = 1; d <= 3; ++d) qt.push_back(mono(cxd(gauss(rng), gauss(rng)), d));
        QuadDiff phi(PlanarDomain::Disk, pt), psi(PlanarDomain::Disk, qt);
        const double lhs = l1_directional_derivative(phi, psi, cfg.tol);
        const double delta = 1e-4;
        const double hp = l1_norm(phi + psi.scaled(delta), cfg.tol * 1e-2);
        const double hm = l1_norm(phi + psi.scaled(-delta), cfg.tol * 1e-2);
        max_mismatch = std::max(max_mismatch, std::abs(lhs - (hp - hm) / (2 * delta)));
    }
    j["derivative_fd_max_mismatch"] = max_mismatch;
    emit(cfg, j.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasiconformal geometric function theory toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    RunConfig cfg;
    std::string config_file;
    app.add_option("--config", config_file, "JSON config file");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--tol", cfg.tol, "quadrature tolerance");
    app.add_option("--trunc", cfg.trunc, "series/matrix truncation order");
    app.add_option("--out", cfg.out, "output path (stdout when omitted)");
    app.add_option("--format", cfg.format, "output format: json|csv");

    auto* g = app.add_subcommand("grunsky", "Grunsky matrix and norm of a series file");
    std::string series_file;
    bool dump_matrix = false;
    g->add_option("series", series_file, "series JSON file")->required();
    g->add_flag("--dump-matrix", dump_matrix, "include the full matrix");

    auto* cb = app.add_subcommand("coeff-bounds", "coefficient bound table");
    int n_from = 3, n_to = 8;
    double k_cb = 0.1;
    cb->add_option("--n-from", n_from, "first n");
    cb->add_option("--n-to", n_to, "last n");
    cb->add_option("--k", k_cb, "dilatation bound")->required();

    auto* ex = app.add_subcommand("extremal", "distance to a rational span with "
                                              "stationarity check");
    std::string psi0_file, points_file;
    ex->add_option("psi0", psi0_file, "differential JSON file")->required();
    ex->add_option("points", points_file, "fixed-point JSON file")->required();

    auto* ms = app.add_subcommand("metric-sweep", "lower/upper metric bounds over a "
                                                  "homotopy grid");
    std::string family = "b1_map", grid_spec;
    double param_re = 0.6, param_im = 0.0, phase = 0.0;
    int koebe_n = 1;
    ms->add_option("--family", family, "b1_map | koebe_qc");
    ms->add_option("--param-re", param_re, "family parameter, real part");
    ms->add_option("--param-im", param_im, "family parameter, imaginary part");
    ms->add_option("--n", koebe_n, "koebe family index");
    ms->add_option("--t-grid", grid_spec, "start:stop:count")->required();
    ms->add_option("--t-phase", phase, "ray angle of the grid");

    auto* bs = app.add_subcommand("beltrami-solve", "solve the Beltrami equation on a "
                                                    "grid field");
    std::string mu_file;
    double constant = 0.1, half_width = 4.0;
    bs->add_option("--mu-file", mu_file, "grid field JSON file");
    bs->add_option("--constant", constant, "use c * indicator of the unit disk");
    bs->add_option("--half-width", half_width, "box half width");
    bs->add_option("--grid", cfg.grid, "grid size");

    auto* vc = app.add_subcommand("variation-check", "first-order accuracy and norm "
                                                     "derivative checks");
    int samples = 3, pairs = 5;
    vc->add_option("--samples", samples, "random fields for the slope test");
    vc->add_option("--pairs", pairs, "random pairs for the derivative test");
    vc->add_option("--grid", cfg.grid, "solver grid size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (!config_file.empty()) apply_config_file(cfg, config_file);
        validate_config(cfg);
        if (g->parsed()) return cmd_grunsky(cfg, series_file, dump_matrix);
        if (cb->parsed()) return cmd_coeff_bounds(cfg, n_from, n_to, k_cb);
        if (ex->parsed()) return cmd_extremal(cfg, psi0_file, points_file);
        if (ms->parsed())
            return cmd_metric_sweep(cfg, family, cxd(param_re, param_im), koebe_n,
                                    grid_spec, phase);
        if (bs->parsed()) return cmd_beltrami_solve(cfg, mu_file, constant, half_width);
        if (vc->parsed()) return cmd_variation_check(cfg, samples, pairs);
    } catch (const io_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const convergence_error& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
