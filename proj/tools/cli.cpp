#include "cli.hpp"

#include "cattaneo/analytic.hpp"
#include "cattaneo/density.hpp"
#include "cattaneo/dirichlet.hpp"
#include "cattaneo/errors.hpp"
#include "cattaneo/process_sim.hpp"
#include "cattaneo/stats.hpp"
#include "cattaneo/validation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#ifndef CATTANEO_VERSION
#define CATTANEO_VERSION "0.0.0"
#endif

namespace cattaneo::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct RunConfig {
    CattaneoParams params;
    std::vector<double> t_grid{0.5, 1.0};
    std::vector<double> xi_grid{0.0, 0.25, 0.5, 1.0, 2.0};
    std::vector<double> x_grid{0.0, 0.25, 0.5, 1.0};
    std::size_t n_samples = 10000;
    std::uint64_t seed = 20240917;
    std::string output_dir = ".";
    unsigned threads = 0;
    std::map<std::string, double> tolerance_overrides;
    std::string boundary = "one";
    double density_x0 = -8.0;
    double density_dx = 0.02;
    std::size_t density_n = 801;
    std::vector<int> criteria;
    bool monte_carlo = false;
};

/// Flag values; unset flags leave the config file value alone.
struct Flags {
    std::string config_path;
    std::optional<double> alpha, beta, lambda, k;
    std::optional<std::vector<double>> t, xi, x;
    std::optional<std::size_t> n;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<unsigned> threads;
    std::optional<std::string> boundary;
    std::optional<double> x0, dx;
    std::optional<std::size_t> nx;
    std::vector<int> criteria;
    bool monte_carlo = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
void take(const json& j, const char* key, T& into) {
    if (j.contains(key)) into = j.at(key).get<T>();
}

void check_grid(const std::vector<double>& g, const char* name) {
    if (g.empty()) throw UsageError(std::string(name) + " must be nonempty");
    for (double v : g) {
        if (!std::isfinite(v)) throw UsageError(std::string(name) + " must be finite");
    }
    if (!std::is_sorted(g.begin(), g.end())) throw UsageError(std::string(name) + " must be sorted");
}

RunConfig load_config(const Flags& f) {
    RunConfig c;
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path);
        if (!in) throw UsageError("cannot open config file " + f.config_path);
        json j;
        try {
            in >> j;
            if (j.contains("params")) {
                const auto& p = j.at("params");
                take(p, "alpha", c.params.alpha);
                take(p, "beta", c.params.beta);
                take(p, "lambda", c.params.lambda);
                take(p, "k", c.params.k);
            }
            take(j, "t_grid", c.t_grid);
            take(j, "xi_grid", c.xi_grid);
            take(j, "x_grid", c.x_grid);
            take(j, "n_samples", c.n_samples);
            take(j, "seed", c.seed);
            take(j, "output_dir", c.output_dir);
            take(j, "threads", c.threads);
            take(j, "tolerance_overrides", c.tolerance_overrides);
            take(j, "boundary", c.boundary);
            take(j, "criteria", c.criteria);
            if (j.contains("density")) {
                const auto& d = j.at("density");
                take(d, "x0", c.density_x0);
                take(d, "dx", c.density_dx);
                take(d, "n", c.density_n);
            }
        } catch (const json::exception& e) {
            throw UsageError("bad config file " + f.config_path + ": " + e.what());
        }
    }
    if (f.alpha) c.params.alpha = *f.alpha;
    if (f.beta) c.params.beta = *f.beta;
    if (f.lambda) c.params.lambda = *f.lambda;
    if (f.k) c.params.k = *f.k;
    if (f.t) c.t_grid = *f.t;
    if (f.xi) c.xi_grid = *f.xi;
    if (f.x) c.x_grid = *f.x;
    if (f.n) c.n_samples = *f.n;
    if (f.seed) c.seed = *f.seed;
    if (f.out) c.output_dir = *f.out;
    if (f.threads) c.threads = *f.threads;
    if (f.boundary) c.boundary = *f.boundary;
    if (f.x0) c.density_x0 = *f.x0;
    if (f.dx) c.density_dx = *f.dx;
    if (f.nx) c.density_n = *f.nx;
    if (!f.criteria.empty()) c.criteria = f.criteria;
    c.monte_carlo = f.monte_carlo;

    check_grid(c.t_grid, "t grid");
    check_grid(c.xi_grid, "xi grid");
    check_grid(c.x_grid, "x grid");
    return c;
}

std::string number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class CsvWriter {
public:
    CsvWriter(const fs::path& path, const std::vector<std::string>& header) : path_(path), out_(path) {
        if (!out_) throw std::runtime_error("cannot write " + path.string());
        write(header);
    }

    void row(const std::vector<std::string>& cells) { write(cells); }

    const fs::path& path() const { return path_; }

private:
    void write(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
        out_ << '\n';
    }

    fs::path path_;
    std::ofstream out_;
};

json params_json(const CattaneoParams& p) {
    return {{"alpha", p.alpha}, {"beta", p.beta}, {"lambda", p.lambda}, {"k", p.k}};
}

class Session {
public:
    Session(std::string command, const RunConfig& cfg)
        : command_(std::move(command)), cfg_(cfg), t0_(std::chrono::steady_clock::now()) {
        fs::create_directories(cfg_.output_dir);
    }

    fs::path file(const std::string& name) const { return fs::path(cfg_.output_dir) / name; }

    /// Writes <stem>.json next to a data file with provenance plus `extra`.
    void sidecar(const fs::path& data, json extra) const {
        json j{{"command", command_},
               {"file", data.filename().string()},
               {"params", params_json(cfg_.params)},
               {"seed", cfg_.seed},
               {"tool_version", CATTANEO_VERSION},
               {"wall_time_seconds",
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count()}};
        for (auto& [key, value] : extra.items()) j[key] = value;
        fs::path side = data;
        side.replace_extension(".json");
        std::ofstream out(side);
        if (!out) throw std::runtime_error("cannot write " + side.string());
        out << j.dump(2) << '\n';
    }

private:
    std::string command_;
    const RunConfig& cfg_;
    std::chrono::steady_clock::time_point t0_;
};

int cmd_cf(const RunConfig& cfg, std::ostream& out) {
    Session s("cf", cfg);
    CsvWriter csv(s.file("cf.csv"), {"xi", "t", "re_u", "im_u"});
    for (double xi : cfg.xi_grid) {
        for (double t : cfg.t_grid) {
            const Complex u = analytic::char_fn(cfg.params, xi, t);
            csv.row({number(xi), number(t), number(u.real()), number(u.imag())});
        }
    }
    s.sidecar(csv.path(), {{"t_grid", cfg.t_grid}, {"xi_grid", cfg.xi_grid},
                           {"columns", {"xi", "t", "re_u", "im_u"}}});
    out << "wrote " << csv.path().string() << '\n';
    return kOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    sim::validate_simulation(cfg.params);
    if (cfg.n_samples < 1) throw UsageError("n_samples must be >= 1");
    Session s("simulate", cfg);
    CsvWriter csv(s.file("simulate.csv"), {"t", "index", "w"});
    json moments = json::array();
    for (double t : cfg.t_grid) {
        const auto e = sim::run_ensemble(cfg.params, t, cfg.n_samples, RngStream{cfg.seed, 0, 0}, cfg.threads);
        for (std::size_t i = 0; i < e.samples.size(); ++i) csv.row({number(t), std::to_string(i), number(e.samples[i])});
        moments.push_back({{"t", t},
                           {"n", e.n},
                           {"mean", e.moments.mean},
                           {"variance", e.moments.variance},
                           {"std_error", e.moments.std_error}});
    }
    s.sidecar(csv.path(), {{"n_samples", cfg.n_samples},
                           {"stream", "trajectory i uses stream (seed, i); stages 0, 1, 2 for L, T, B"},
                           {"threads", cfg.threads},
                           {"moments", moments},
                           {"columns", {"t", "index", "w"}}});
    out << "wrote " << csv.path().string() << '\n';
    return kOk;
}

int cmd_density(const RunConfig& cfg, std::ostream& out) {
    Session s("density", cfg);
    CsvWriter csv(s.file("density.csv"), {"t", "x", "density"});
    json per_t = json::array();
    const transforms::GridSpec grid{cfg.density_x0, cfg.density_dx, cfg.density_n};
    for (double t : cfg.t_grid) {
        const auto r = transforms::cf_to_density(
            [&](double xi) { return analytic::char_fn(cfg.params, xi, t).real(); }, grid);
        double mass = 0.0;
        const auto& f = r.density;
        for (std::size_t i = 0; i < f.size(); ++i) {
            csv.row({number(t), number(f.x(i)), number(f.values[i])});
            if (i + 1 < f.size()) mass += 0.5 * f.dx * (f.values[i] + f.values[i + 1]);
        }
        for (const auto& w : r.warnings) out << "warning (t=" << t << "): " << w << '\n';
        per_t.push_back({{"t", t}, {"mass", mass}, {"max_error_estimate", r.max_error_estimate}, {"warnings", r.warnings}});
    }
    s.sidecar(csv.path(), {{"grid", {{"x0", grid.x0}, {"dx", grid.dx}, {"n", grid.n}}},
                           {"per_t", per_t},
                           {"columns", {"t", "x", "density"}}});
    out << "wrote " << csv.path().string() << '\n';
    return kOk;
}

int cmd_variance(const RunConfig& cfg, std::ostream& out) {
    Session s("variance", cfg);
    std::vector<std::string> header{"t", "mean_inverse_subordinator", "variance", "variance_formula"};
    if (cfg.monte_carlo) {
        sim::validate_simulation(cfg.params);
        header.insert(header.end(), {"mc_variance", "mc_variance_se"});
    }
    CsvWriter csv(s.file("variance.csv"), header);
    for (double t : cfg.t_grid) {
        std::vector<std::string> row{number(t), number(analytic::mean_subordinator(cfg.params, t)),
                                     number(analytic::variance_time_changed(cfg.params, t)),
                                     number(analytic::variance_formula(cfg.params, t))};
        if (cfg.monte_carlo) {
            const auto e = sim::run_ensemble(cfg.params, t, cfg.n_samples, RngStream{cfg.seed, 0, 0}, cfg.threads);
            row.push_back(number(e.moments.variance));
            row.push_back(number(stats::variance_std_error(e.samples)));
        }
        csv.row(row);
    }
    json extra{{"columns", header},
               {"notes", "variance = 2 alpha lambda^{alpha-1} U(t); variance_formula is the candidate closed form "
                         "alpha lambda^{alpha-2} (1 - alpha + alpha lambda^alpha) U(t), reported for comparison"}};
    if (cfg.monte_carlo) extra["n_samples"] = cfg.n_samples;
    s.sidecar(csv.path(), extra);
    out << "wrote " << csv.path().string() << '\n';
    return kOk;
}

int cmd_dirichlet(const RunConfig& cfg, std::ostream& out) {
    const auto phi = dirichlet::BoundarySignal::parse(cfg.boundary);
    const auto& p = cfg.params;
    for (double t : cfg.t_grid) {
        if (!(t > 0.0)) throw UsageError("dirichlet needs t > 0");
    }
    const bool special = p.alpha < 1.0 && std::abs(p.k - std::pow(p.lambda, 0.5 * p.alpha)) <= 1e-12 * std::max(1.0, p.k);

    Session s("dirichlet", cfg);
    std::vector<std::string> header{"x", "t", "u", "status"};
    if (special) header.insert(header.end(), {"u_convolution", "difference"});
    CsvWriter csv(s.file("dirichlet.csv"), header);

    GridFunction samples;
    if (special) {
        const double dz = 1e-3;
        const auto n = static_cast<std::size_t>(std::ceil(cfg.t_grid.back() / dz)) + 2;
        samples = GridFunction::sample([&](double z) { return phi.value(z); }, 0.0, dz, n);
    }
    int failures = 0;
    for (double x : cfg.x_grid) {
        for (double t : cfg.t_grid) {
            double u = std::nan("");
            std::string status = "ok";
            try {
                u = dirichlet::dirichlet_solution(p, x, t, phi);
            } catch (const ConvergenceError&) {
                status = "no_convergence";
                ++failures;
            }
            std::vector<std::string> row{number(x), number(t), number(u), status};
            if (special) {
                double conv = std::nan("");
                try {
                    conv = dirichlet::dirichlet_special_case(p, x, t, samples);
                } catch (const ConvergenceError&) {
                }
                row.push_back(number(conv));
                row.push_back(number(u - conv));
            }
            csv.row(row);
        }
    }
    s.sidecar(csv.path(), {{"boundary", phi.name()},
                           {"x_grid", cfg.x_grid},
                           {"t_grid", cfg.t_grid},
                           {"special_case", special},
                           {"points_without_convergence", failures},
                           {"columns", header}});
    out << "wrote " << csv.path().string() << '\n';
    return kOk;
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n_samples < 100) throw UsageError("validate needs n_samples >= 100");
    Session s("validate", cfg);
    validation::ValidationConfig vc;
    vc.params = cfg.params;
    vc.n_samples = cfg.n_samples;
    vc.seed = cfg.seed;
    vc.threads = cfg.threads;
    vc.tolerance_overrides = cfg.tolerance_overrides;
    const auto results = validation::run_validation(vc, cfg.criteria);

    bool ok = true;
    json criteria = json::array();
    json reports = json::array();
    for (const auto& c : results) {
        ok = ok && c.passed();
        out << "criterion " << c.id << ' ' << (c.passed() ? "PASS" : "FAIL") << "  " << c.title << " ("
            << number(std::round(c.seconds * 100) / 100) << " s)\n";
        criteria.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed()}, {"seconds", c.seconds}});
        for (const auto& r : c.reports) {
            if (r.verdict == validation::Verdict::fail) out << "  failed: " << r.quantity << " (" << r.detail << ")\n";
            reports.push_back({{"criterion", r.criterion},
                               {"quantity", r.quantity},
                               {"estimate", complex_json(r.estimate)},
                               {"std_error", r.std_error},
                               {"oracle", complex_json(r.oracle)},
                               {"z_score", r.z_score},
                               {"rule", r.rule},
                               {"verdict", validation::to_string(r.verdict)},
                               {"failure_kind", validation::to_string(r.failure)},
                               {"detail", r.detail}});
        }
    }
    const fs::path path = s.file("validation.json");
    s.sidecar(path, {{"n_samples", cfg.n_samples},
                     {"tolerance_widening", validation::tolerance_widening(cfg.n_samples)},
                     {"passed", ok},
                     {"criteria", criteria},
                     {"reports", reports}});
    out << (ok ? "all asserted checks passed" : "validation failed") << "; report in " << path.string() << '\n';
    return ok ? kOk : kValidationFailed;
}

void add_common(CLI::App& app, Flags& f) {
    app.add_option("--config", f.config_path, "JSON run configuration; flags override it")->check(CLI::ExistingFile);
    app.add_option("--seed", f.seed, "master seed");
    app.add_option("--out", f.out, "output directory");
    app.add_option("--threads", f.threads, "worker threads (0 = all cores)");
    app.add_option("--alpha", f.alpha, "space order in (0,1]");
    app.add_option("--beta", f.beta, "time order");
    app.add_option("--lambda", f.lambda, "tempering rate >= 0");
    app.add_option("--k", f.k, "damping > 0");
    app.add_option("--t", f.t, "time grid")->delimiter(',');
    app.add_option("--xi", f.xi, "Fourier grid")->delimiter(',');
    app.add_option("--n", f.n, "Monte Carlo sample size");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tempered fractional Cattaneo model: analytic solution and Monte Carlo"};
    app.set_version_flag("--version", CATTANEO_VERSION);
    app.require_subcommand(1);
    app.fallthrough();
    Flags flags;
    add_common(app, flags);

    auto* cf = app.add_subcommand("cf", "characteristic function on the xi x t grid");
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo samples of W(t)");
    auto* density = app.add_subcommand("density", "density of W(t) from the characteristic function");
    density->add_option("--x0", flags.x0, "first grid point");
    density->add_option("--dx", flags.dx, "grid step");
    density->add_option("--nx", flags.nx, "grid size");
    auto* variance = app.add_subcommand("variance", "variance formulas, optionally with Monte Carlo");
    variance->add_flag("--mc", flags.monte_carlo, "add Monte Carlo columns");
    auto* dir = app.add_subcommand("dirichlet", "half-line Dirichlet problem");
    dir->add_option("--boundary", flags.boundary, "zero, one, exp or exp:<rate>");
    dir->add_option("--x", flags.x, "space grid")->delimiter(',');
    auto* validate = app.add_subcommand("validate", "acceptance suite");
    validate->add_option("--criteria", flags.criteria, "subset of criteria 1-14")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        const RunConfig cfg = load_config(flags);
        if (cf->parsed()) return cmd_cf(cfg, out);
        if (simulate->parsed()) return cmd_simulate(cfg, out);
        if (density->parsed()) return cmd_density(cfg, out);
        if (variance->parsed()) return cmd_variance(cfg, out);
        if (dir->parsed()) return cmd_dirichlet(cfg, out);
        if (validate->parsed()) return cmd_validate(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailed;
    }
    return kUsageError;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace cattaneo::cli
