#include "cattaneo/validation.hpp"

#include "cattaneo/caputo.hpp"
#include "cattaneo/density.hpp"
#include "cattaneo/dirichlet.hpp"
#include "cattaneo/errors.hpp"
#include "cattaneo/laplace.hpp"
#include "cattaneo/process_sim.hpp"
#include "cattaneo/special_fn.hpp"
#include "cattaneo/stable.hpp"
#include "cattaneo/stats.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

namespace cattaneo::validation {

namespace {

using detail::require;
using transforms::laplace_invert;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(3);
    out << v;
    return out.str();
}

/// Mittag-Leffler series in 50-digit arithmetic, at least `terms` terms and
/// until a term drops below 1e-30 of the running sum.
double ml_series_mp(double beta, double gamma, double x, int terms) {
    using Mp = boost::multiprecision::cpp_bin_float_50;
    Mp sum = 0;
    Mp power = 1;
    const Mp z = x;
    for (int n = 0; n < 4000; ++n) {
        const Mp term = power / boost::multiprecision::tgamma(Mp(beta) * n + Mp(gamma));
        sum += term;
        if (n + 1 >= terms && abs(term) <= Mp(1e-30) * (1 + abs(sum))) return static_cast<double>(sum);
        power *= z;
    }
    throw ConvergenceError("series oracle not converged");
}

struct Tolerances {
    double cf_floor = 0.02;
    double z_max = 4.0;
    double mean_rel = 0.03;
    double variance_rel = 0.05;
    double p_min = 0.01;
    double widen = 1.0;

    explicit Tolerances(const ValidationConfig& cfg) : widen(tolerance_widening(cfg.n_samples)) {
        for (const auto& [key, value] : cfg.tolerance_overrides) {
            require(std::isfinite(value) && value > 0.0, "tolerance override '" + key + "' must be > 0");
            if (key == "cf_floor") cf_floor = value;
            else if (key == "z_max") z_max = value;
            else if (key == "mean_rel") mean_rel = value;
            else if (key == "variance_rel") variance_rel = value;
            else if (key == "p_min") p_min = value;
            else throw DomainError("unknown tolerance override '" + key + "'");
        }
    }
};

// Ensembles are cached per (kind, t). Each slot owns a fixed block of stream
// ids, so a criterion sees the same samples whether it runs alone or in the
// full suite.
class Context {
public:
    explicit Context(const ValidationConfig& cfg) : cfg_(cfg), tol(cfg) {}

    const sim::TrajectoryEnsemble& ensemble(sim::Observable what, double t, int slot) {
        auto it = cache_.find(slot);
        if (it != cache_.end()) return it->second;
        const RngStream base{cfg_.seed, static_cast<std::uint64_t>(slot) << 40, 0};
        return cache_.emplace(slot, sim::run_ensemble(cfg_.params, t, cfg_.n_samples, base, cfg_.threads, what))
            .first->second;
    }

    const sim::TrajectoryEnsemble& W(double t) { return ensemble(sim::Observable::W, t, t == 0.5 ? 1 : 2); }
    const sim::TrajectoryEnsemble& L(double t) {
        return ensemble(sim::Observable::inverse_subordinator, t, t == 0.5 ? 3 : (t == 1.0 ? 4 : 5));
    }
    const sim::TrajectoryEnsemble& X1() { return ensemble(sim::Observable::X, 1.0, 6); }

    RngStream stream(int slot) const { return {cfg_.seed, static_cast<std::uint64_t>(slot) << 40, 0}; }

    const ValidationConfig& cfg() const { return cfg_; }

private:
    const ValidationConfig& cfg_;
    std::map<int, sim::TrajectoryEnsemble> cache_;

public:
    Tolerances tol;
};

class Recorder {
public:
    Recorder(int criterion, std::vector<ValidationReport>& out) : c_(criterion), out_(out) {}

    /// Asserted |estimate - oracle| <= tol.
    void within(const std::string& q, Complex est, Complex oracle, double tol, double se = 0.0,
                const std::string& detail = {}) {
        push(q, est, oracle, se, "|d| <= " + fmt(tol), std::abs(est - oracle) <= tol ? Verdict::pass : Verdict::fail,
             detail);
    }

    /// Asserted estimate > threshold (p-values).
    void above(const std::string& q, double est, double threshold, const std::string& detail = {}) {
        push(q, est, threshold, 0.0, "> " + fmt(threshold), est > threshold ? Verdict::pass : Verdict::fail, detail);
    }

    /// Asserted estimate < threshold (runtimes, residuals).
    void below(const std::string& q, double est, double threshold, const std::string& detail = {}) {
        push(q, est, threshold, 0.0, "< " + fmt(threshold), est < threshold ? Verdict::pass : Verdict::fail, detail);
    }

    void reported(const std::string& q, Complex est, Complex oracle, double se, const std::string& detail) {
        push(q, est, oracle, se, "reported only", Verdict::reported, detail);
    }

    /// Runs body; an exception becomes an engine failure (or a note, for reported checks).
    void guard(const std::string& q, const std::function<void()>& body, bool asserted = true) {
        try {
            body();
        } catch (const std::exception& e) {
            ValidationReport r;
            r.criterion = c_;
            r.quantity = q;
            r.estimate = r.oracle = kNaN;
            r.z_score = kNaN;
            r.rule = asserted ? "must evaluate" : "reported only";
            r.verdict = asserted ? Verdict::fail : Verdict::reported;
            r.failure = asserted ? FailureKind::engine : FailureKind::none;
            r.detail = e.what();
            out_.push_back(r);
        }
    }

private:
    void push(const std::string& q, Complex est, Complex oracle, double se, std::string rule, Verdict v,
              const std::string& detail) {
        ValidationReport r;
        r.criterion = c_;
        r.quantity = q;
        r.estimate = est;
        r.std_error = se;
        r.oracle = oracle;
        r.z_score = se > 0.0 ? std::abs(est - oracle) / se : kNaN;
        r.rule = std::move(rule);
        r.verdict = v;
        r.failure = v == Verdict::fail ? FailureKind::tolerance : FailureKind::none;
        r.detail = detail;
        out_.push_back(std::move(r));
    }

    int c_;
    std::vector<ValidationReport>& out_;
};

std::string at(const std::string& what, double t) {
    std::ostringstream out;
    out << what << " t=" << t;
    return out.str();
}

std::string at(const std::string& what, double xi, double t) {
    std::ostringstream out;
    out << what << " xi=" << xi << " t=" << t;
    return out.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Normalization over a random parameter sweep.
void normalization(Context& ctx, Recorder& rec) {
    const auto t0 = std::chrono::steady_clock::now();
    Generator gen(ctx.stream(7));
    std::vector<CattaneoParams> sweep;
    for (int i = 0; i < 20; ++i) {
        CattaneoParams p;
        p.alpha = 0.05 + 0.95 * gen.uniform01();
        p.beta = 0.05 + 0.9 * gen.uniform01();
        p.lambda = i % 5 == 0 ? 0.0 : 3.0 * gen.uniform01();
        p.k = 0.05 + 2.95 * gen.uniform01();
        sweep.push_back(p);
    }
    for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        rec.guard(at("u(0,t) over sweep", t), [&] {
            double worst = 0.0;
            Complex worst_value = 1.0;
            for (const auto& p : sweep) {
                const Complex u = analytic::char_fn(p, 0.0, t);
                if (std::abs(u - 1.0) >= worst) {
                    worst = std::abs(u - 1.0);
                    worst_value = u;
                }
            }
            rec.within(at("u(0,t) over sweep", t), worst_value, 1.0, 1e-12, 0.0, "worst of 20 parameter sets");
        });
    }
    rec.below("runtime seconds", seconds_since(t0), 1.0);
}

// 2. char_fn against Talbot inversion of the Fourier-Laplace form.
void duality(Context&, Recorder& rec) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::pair<const char*, CattaneoParams> sets[] = {
        {"k^2>theta", {0.7, 0.4, 1.0, 3.0}},
        {"k^2<theta", {0.7, 0.4, 1.0, 0.1}},
    };
    for (const auto& [label, p] : sets) {
        for (double xi : {0.25, 1.0, 3.0}) {
            for (double t : {0.5, 1.0}) {
                const std::string q = at(std::string("u vs inverted transform, ") + label, xi, t);
                rec.guard(q, [&, p = p, xi, t] {
                    const Complex u = analytic::char_fn(p, xi, t);
                    const double inv =
                        laplace_invert([&](Complex s) { return analytic::fourier_laplace(p, xi, s); }, t);
                    std::ostringstream d;
                    d << "k^2 - theta = " << p.k * p.k - analytic::theta(p, xi);
                    rec.within(q, u, inv, 1e-6 * std::abs(inv), 0.0, d.str());
                });
            }
        }
    }
    rec.below("runtime seconds", seconds_since(t0), 10.0);
}

// 3. Empirical characteristic function against char_fn.
void mc_char_fn(Context& ctx, Recorder& rec) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& p = ctx.cfg().params;
    for (double t : {0.5, 1.0}) {
        rec.guard(at("ensemble W", t), [&] {
            const auto& e = ctx.W(t);
            for (double xi : {0.25, 0.5, 1.0}) {
                const auto [cf, se] = sim::empirical_cf(e, xi);
                const Complex u = analytic::char_fn(p, xi, t);
                const double tol = std::max(ctx.tol.cf_floor * ctx.tol.widen, ctx.tol.z_max * se);
                rec.within(at("Re empirical cf", xi, t), cf.real(), u.real(), tol, se);
                rec.reported(at("Im empirical cf", xi, t), cf.imag(), 0.0, se, "symmetric law, expected 0");
            }
        });
    }
    rec.below("runtime seconds", seconds_since(t0), 300.0);
}

// 4. Zero mean of W.
void zero_mean(Context& ctx, Recorder& rec) {
    for (double t : {0.5, 1.0}) {
        rec.guard(at("mean W", t), [&] {
            const auto& m = ctx.W(t).moments;
            rec.within(at("mean W", t), m.mean, 0.0, ctx.tol.z_max * m.std_error, m.std_error);
        });
    }
}

// 5. Mean of the inverse subordinator against U(t).
void inverse_mean(Context& ctx, Recorder& rec) {
    const auto& p = ctx.cfg().params;
    for (double t : {0.5, 1.0, 2.0}) {
        rec.guard(at("mean L", t), [&] {
            const auto& m = ctx.L(t).moments;
            const double u = analytic::mean_subordinator(p, t);
            rec.within(at("mean L", t), m.mean, u, ctx.tol.mean_rel * ctx.tol.widen * u, m.std_error,
                       "oracle t^{2b} E_{b,2b+1}(-2k t^b)");
        });
    }
}

// 6. Var W against U times an independent estimate of Var X(1).
void variance_identity(Context& ctx, Recorder& rec) {
    const auto& p = ctx.cfg().params;
    rec.guard("Var W(1) vs U(1) Var X(1)", [&] {
        const auto& w = ctx.W(1.0);
        const auto& x = ctx.X1();
        const double u = analytic::mean_subordinator(p, 1.0);
        const double oracle = u * x.moments.variance;
        const double se = std::hypot(stats::variance_std_error(w.samples), u * stats::variance_std_error(x.samples));
        rec.within("Var W(1) vs U(1) Var X(1)", w.moments.variance, oracle,
                   ctx.tol.variance_rel * ctx.tol.widen * oracle, se, "Var X(1) from an independent ensemble");
        if (p.lambda > 0.0) {
            rec.reported("Var W(1) vs 2 a lambda^{a-1} U(1)", w.moments.variance,
                         analytic::variance_time_changed(p, 1.0), stats::variance_std_error(w.samples),
                         "closed form of the same identity");
        }
    });
}

// 7. Reduction of the variance formula at lambda = 0.
void lambda_zero(Context& ctx, Recorder& rec) {
    CattaneoParams p = ctx.cfg().params;
    p.lambda = 0.0;
    for (double t : {0.5, 1.0, 2.0}) {
        rec.guard(at("variance formula, lambda=0", t), [&] {
            const double tb = std::pow(t, p.beta);
            const double oracle =
                p.alpha * (1.0 - p.alpha) * tb * tb * ml_series_mp(p.beta, 2.0 * p.beta + 1.0, -2.0 * p.k * tb, 400);
            rec.within(at("variance formula, lambda=0", t), analytic::variance_formula(p, t), oracle,
                       1e-12 * std::max(1.0, std::abs(oracle)), 0.0, "oracle by 50-digit series");
        });
    }
}

// 8. The general-lambda variance formula, reported next to Monte Carlo.
void variance_probe(Context& ctx, Recorder& rec) {
    const auto& p = ctx.cfg().params;
    rec.guard(
        "variance formula vs Var W(1)",
        [&] {
            const auto& w = ctx.W(1.0);
            rec.reported("variance formula vs Var W(1)", analytic::variance_formula(p, 1.0), w.moments.variance,
                         stats::variance_std_error(w.samples),
                         "estimate = closed form, oracle = ensemble variance; not asserted");
        },
        false);
}

// 9. Second-order-in-time Laplace solution: ODE residual and initial data.
void beta1_ode(Context&, Recorder& rec) {
    const CattaneoParams sets[] = {{0.6, 1.0, 1.0, 0.8}, {0.3, 1.0, 0.0, 0.5}, {1.0, 1.0, 2.0, 0.1}};
    const Complex svals[] = {{0.5, 0.0}, {2.0, 0.0}, {1.0, 1.0}, {3.0, -2.0}};
    const double h = 1e-3;
    using Fn = Complex (*)(const CattaneoParams&, Complex, double);
    const auto residual = [&](Fn u, const CattaneoParams& p, Complex s, double t) {
        const Complex f2 = u(p, s, t + 2 * h), f1 = u(p, s, t + h), f0 = u(p, s, t);
        const Complex b1 = u(p, s, t - h), b2 = u(p, s, t - 2 * h);
        const Complex d1 = (-f2 + 8.0 * f1 - 8.0 * b1 + b2) / (12.0 * h);
        const Complex d2 = (-f2 + 16.0 * f1 - 30.0 * f0 + 16.0 * b1 - b2) / (12.0 * h * h);
        const Complex psi = analytic::tempered_exponent(p, s);
        return std::abs(d2 + 2.0 * p.k * d1 - psi * f0) / std::max(1.0, std::abs(psi * f0));
    };
    for (const auto& p : sets) {
        std::ostringstream label;
        label << "alpha=" << p.alpha << " lambda=" << p.lambda << " k=" << p.k;
        rec.guard("ODE residual " + label.str(), [&] {
            double worst = 0.0;
            double worst_printed = 0.0;
            double worst_init = 0.0;
            for (Complex s : svals) {
                worst_init = std::max(worst_init, std::abs(analytic::beta1_space_laplace(p, s, 0.0) - 1.0));
                for (double t : {0.2, 0.7, 1.5}) {
                    worst = std::max(worst, residual(analytic::beta1_space_laplace, p, s, t));
                    worst_printed = std::max(worst_printed, residual(analytic::beta1_space_laplace_printed, p, s, t));
                }
            }
            rec.within("ODE residual " + label.str(), worst, 0.0, 1e-6, 0.0,
                       "max over 4 s values and t in {0.2, 0.7, 1.5}, fourth-order differences, h = 1e-3");
            rec.within("u(s,0) - 1 " + label.str(), worst_init, 0.0, 1e-15);
            rec.reported("ODE residual, root sqrt(k^2 - psi) " + label.str(), worst_printed, 0.0, 0.0,
                         "sign-convention probe; large values mean that variant solves a different ODE");
        });
    }
    rec.guard("du/dt(s,0)", [&] {
        const CattaneoParams p = sets[0];
        const Complex s = svals[2];
        const Complex d = (-analytic::beta1_space_laplace(p, s, 2 * h) + 4.0 * analytic::beta1_space_laplace(p, s, h) -
                           3.0) / (2.0 * h);
        rec.within("du/dt(s,0)", d, 0.0, 1e-5, 0.0, "one-sided second-order difference");
    });
}

// 10. Dirichlet problem: boundary recovery and the alpha = 1 reduction.
void dirichlet_boundary(Context& ctx, Recorder& rec) {
    const CattaneoParams p{0.7, 0.4, 1.0, 0.5};
    for (const char* name : {"one", "exp"}) {
        const auto phi = dirichlet::BoundarySignal::parse(name);
        for (double t : {0.5, 1.0, 2.0}) {
            const std::string q = at(std::string("u(0,t) phi=") + name, t);
            rec.guard(q, [&, t] { rec.within(q, dirichlet::dirichlet_solution(p, 0.0, t, phi), phi.value(t), 1e-6); });
        }
    }
    rec.guard("alpha=1 reduction", [&] {
        double worst = 0.0;
        for (const CattaneoParams& q : {CattaneoParams{1.0, 0.4, 1.0, 0.5}, CattaneoParams{1.0, 0.4, 0.0, 2.0}}) {
            for (double x : {0.0, 0.3, 1.0, 2.5}) {
                for (Complex s : {Complex(1.0, 0.0), Complex(0.5, 2.0), Complex(3.0, -1.0)}) {
                    const Complex phi = 1.0 / s;
                    const Complex closed = phi * std::exp(-q.lambda * x - (s * s + 2.0 * q.k * s + q.lambda) * x);
                    const Complex v = dirichlet::dirichlet_laplace(q, x, s, phi);
                    worst = std::max(worst, std::abs(v - closed) / std::abs(closed));
                }
            }
        }
        rec.within("alpha=1 reduction, max relative difference", worst, 0.0, 1e-10);
    });
    rec.guard(
        "eigen relation sign",
        [&] {
            // e^{lambda x} u~ is phi~ E_alpha(-c x^alpha); its shifted Caputo derivative is -c u~.
            const double s = 1.0;
            const double c = s * s + 2.0 * p.k * s + std::pow(p.lambda, p.alpha);
            const auto f = GridFunction::sample(
                [&](double x) { return dirichlet::dirichlet_laplace(p, x, s, 1.0 / s).real(); }, 0.0, 5e-4, 2001);
            const auto d = transforms::shifted_caputo(f, p.alpha, p.lambda);
            const double u = f.values[1000];
            rec.reported("eigen relation sign", d.values[1000], -c * u, 0.0,
                         "shifted Caputo of u~ at x=0.5 against -(s^2+2ks+lambda^alpha) u~; the + sign gives " +
                             fmt(c * u));
        },
        false);
    (void)ctx;
}

// 11. Closed-form convolution against inversion in the case k = lambda^{alpha/2}.
void dirichlet_special(Context&, Recorder& rec) {
    const CattaneoParams p{0.5, 0.4, 1.0, 1.0};
    const auto phi = GridFunction::sample([](double) { return 1.0; }, 0.0, 1e-3, 1601);
    const auto signal = dirichlet::BoundarySignal::parse("one");
    for (double x : {0.25, 0.5, 1.0}) {
        for (double t : {0.5, 1.0, 1.5}) {
            std::ostringstream q;
            q << "convolution vs inversion x=" << x << " t=" << t;
            rec.guard(q.str(), [&, x, t] {
                const double conv = dirichlet::dirichlet_special_case(p, x, t, phi);
                const double inv = dirichlet::dirichlet_solution(p, x, t, signal);
                rec.within(q.str(), conv, inv, 1e-3 * std::abs(inv), 0.0, "phi = 1");
            });
        }
    }
}

// 12. Samplers: stable KS test and tempered mean.
void samplers(Context& ctx, Recorder& rec) {
    rec.guard("stable alpha=1/2 KS", [&] {
        const std::size_t n = std::min<std::size_t>(10000, ctx.cfg().n_samples);
        Generator gen(ctx.stream(8));
        std::vector<double> xs(n);
        for (auto& x : xs) x = sample_stable({0.5, 1.0}, gen);
        const auto ks = stats::ks_test(xs, [](double x) { return x <= 0.0 ? 0.0 : std::erfc(0.5 / std::sqrt(x)); });
        rec.above("stable alpha=1/2 KS p-value", ks.p_value, ctx.tol.p_min,
                  "n = " + std::to_string(n) + ", D = " + fmt(ks.statistic));
    });
    rec.guard("tempered mean", [&] {
        const TemperedParams tp{0.7, 1.0, 1.0};
        Generator gen(ctx.stream(9));
        std::vector<double> xs(ctx.cfg().n_samples);
        for (auto& x : xs) x = sample_tempered(tp, gen);
        const auto m = stats::moments(xs);
        const double oracle = tp.alpha * std::pow(tp.lambda, tp.alpha - 1.0) * tp.t;
        rec.within("tempered mean (0.7, 1, 1)", m.mean, oracle, ctx.tol.z_max * m.std_error, m.std_error);
    });
}

// 13. Mittag-Leffler identities and the Laplace pair.
void mittag_leffler(Context&, Recorder& rec) {
    using special_fn::mittag_leffler;
    rec.guard("E_{1,1}(1)", [&] {
        rec.within("E_{1,1}(1)", mittag_leffler({1.0, 1.0}, 1.0), std::numbers::e, 1e-15 * std::numbers::e);
    });
    rec.guard("E_{2,1}(-pi^2/4)", [&] {
        rec.within("E_{2,1}(-pi^2/4)", mittag_leffler({2.0, 1.0}, -kPi * kPi / 4.0), 0.0, 1e-12);
    });
    rec.guard("E_{0.7,1}(-3.2)", [&] {
        const double oracle = ml_series_mp(0.7, 1.0, -3.2, 400);
        rec.within("E_{0.7,1}(-3.2)", mittag_leffler({0.7, 1.0}, -3.2), oracle, 1e-10 * std::abs(oracle), 0.0,
                   "oracle: 400-term series in 50-digit arithmetic");
    });
    rec.guard("E_{0.4,1.8}(-5)", [&] {
        const double oracle = ml_series_mp(0.4, 1.8, -5.0, 400);
        rec.within("E_{0.4,1.8}(-5)", special_fn::mittag_leffler_real({0.4, 1.8}, -5.0), oracle,
                   1e-10 * std::abs(oracle), 0.0, "oracle: series in 50-digit arithmetic");
    });
    rec.guard("Laplace pair s^{b-1}/(s^b+1)", [&] {
        const double b = 0.4;
        const double inv = laplace_invert([b](Complex s) { return std::pow(s, b - 1.0) / (std::pow(s, b) + 1.0); }, 1.0);
        rec.within("inverse of s^{b-1}/(s^b+1) at t=1, b=0.4", inv, special_fn::mittag_leffler_real({b, 1.0}, -1.0),
                   1e-7);
    });
}

// 14. Density from the characteristic function against the ensemble histogram.
void density_pipeline(Context& ctx, Recorder& rec) {
    const auto& p = ctx.cfg().params;
    const double t = 1.0;
    rec.guard("density of W(1)", [&] {
        const transforms::GridSpec grid{-8.0, 0.01, 1601};
        const auto result = transforms::cf_to_density([&](double xi) { return analytic::char_fn(p, xi, t).real(); }, grid);
        const auto& f = result.density;
        double mass = 0.0;
        for (std::size_t i = 0; i + 1 < f.size(); ++i) mass += 0.5 * f.dx * (f.values[i] + f.values[i + 1]);
        rec.within("density mass on [-8, 8]", mass, 1.0, 1e-3, 0.0,
                   "trapezoid on 1601 points; max quadrature error estimate " + fmt(result.max_error_estimate));

        // 40 bins: 38 of equal width on [-a, a] and two tails closed at the grid ends.
        const double a = 4.0;
        const int bins = 40;
        const double w = 2.0 * a / (bins - 2);
        std::vector<double> edges{grid.x0};
        for (int i = 0; i <= bins - 2; ++i) edges.push_back(-a + i * w);
        edges.push_back(-grid.x0);
        const auto integrate = [&](double lo, double hi) {
            const int m = 64;
            const double h = (hi - lo) / m;
            double s = 0.5 * (f.interpolate(lo) + f.interpolate(hi));
            for (int j = 1; j < m; ++j) s += f.interpolate(lo + j * h);
            return s * h;
        };
        const auto& e = ctx.W(t);
        std::vector<double> expected(bins), observed(bins, 0.0);
        double total = 0.0;
        for (int i = 0; i < bins; ++i) total += expected[i] = integrate(edges[i], edges[i + 1]);
        for (auto& v : expected) v *= static_cast<double>(e.n) / total;
        for (double x : e.samples) {
            const auto it = std::upper_bound(edges.begin() + 1, edges.end() - 1, x);
            observed[static_cast<std::size_t>(it - edges.begin() - 1)] += 1.0;
        }
        const auto chi = stats::chi_square(observed, expected);
        rec.above("histogram chi-square p-value", chi.p_value, ctx.tol.p_min,
                  "chi2 = " + fmt(chi.statistic) + ", dof = " + std::to_string(chi.dof));
    });
}

using Runner = void (*)(Context&, Recorder&);

struct Criterion {
    const char* title;
    Runner run;
};

const Criterion kCriteria[kCriterionCount] = {
    {"normalization u(0,t) = 1", normalization},
    {"transform duality", duality},
    {"Monte Carlo characteristic function", mc_char_fn},
    {"zero mean", zero_mean},
    {"inverse subordinator mean U(t)", inverse_mean},
    {"time-change variance identity", variance_identity},
    {"lambda = 0 variance reduction", lambda_zero},
    {"general-lambda variance formula (reported)", variance_probe},
    {"second-order time equation in Laplace space", beta1_ode},
    {"Dirichlet boundary and alpha = 1 reduction", dirichlet_boundary},
    {"Dirichlet special case k = lambda^{alpha/2}", dirichlet_special},
    {"stable and tempered samplers", samplers},
    {"Mittag-Leffler engine", mittag_leffler},
    {"density pipeline", density_pipeline},
};

}  // namespace

bool CriterionResult::passed() const {
    return std::none_of(reports.begin(), reports.end(), [](const auto& r) { return r.verdict == Verdict::fail; });
}

double tolerance_widening(std::size_t n_samples) {
    return n_samples >= 100000 ? 1.0 : std::sqrt(1e5 / static_cast<double>(n_samples));
}

std::string criterion_title(int id) {
    require(id >= 1 && id <= kCriterionCount, "criterion id must lie in 1..14");
    return kCriteria[id - 1].title;
}

std::vector<CriterionResult> run_validation(const ValidationConfig& cfg, const std::vector<int>& ids) {
    require(cfg.n_samples >= 100, "validation needs n_samples >= 100");
    std::vector<int> todo = ids;
    if (todo.empty()) {
        for (int i = 1; i <= kCriterionCount; ++i) todo.push_back(i);
    }
    for (int id : todo) require(id >= 1 && id <= kCriterionCount, "criterion id must lie in 1..14");

    Context ctx(cfg);
    std::vector<CriterionResult> out;
    for (int id : todo) {
        CriterionResult r;
        r.id = id;
        r.title = kCriteria[id - 1].title;
        const auto t0 = std::chrono::steady_clock::now();
        Recorder rec(id, r.reports);
        kCriteria[id - 1].run(ctx, rec);
        r.seconds = seconds_since(t0);
        out.push_back(std::move(r));
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::reported: return "reported";
    }
    return "";
}

std::string to_string(FailureKind k) {
    switch (k) {
        case FailureKind::none: return "none";
        case FailureKind::tolerance: return "tolerance";
        case FailureKind::engine: return "engine_failure";
    }
    return "";
}

}  // namespace cattaneo::validation
