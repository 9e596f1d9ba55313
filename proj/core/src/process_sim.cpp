#include "cattaneo/process_sim.hpp"

#include "cattaneo/errors.hpp"
#include "cattaneo/stable.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

namespace cattaneo::sim {

namespace {

using cattaneo::detail::require;

constexpr long kMaxGridSteps = 100000000;

struct Summed {
    double beta;
    double scale2;  // (2k)^{1/beta}

    explicit Summed(const CattaneoParams& p) : beta(p.beta), scale2(std::pow(2.0 * p.k, 1.0 / p.beta)) {}

    double increment(double ds, Generator& gen) const {
        const double s1 = sample_stable({2.0 * beta, 1.0}, gen);
        const double s2 = sample_stable({beta, 1.0}, gen);
        return std::pow(ds, 0.5 / beta) * s1 + scale2 * std::pow(ds, 1.0 / beta) * s2;
    }
};

}  // namespace

void validate_simulation(const CattaneoParams& p) {
    require(p.alpha > 0.0 && p.alpha < 1.0, "simulation: alpha must lie in (0,1)");
    require(p.beta > 0.0 && p.beta < 0.5,
            "simulation: beta must lie in (0,1/2); the time change needs a (2 beta)-stable subordinator");
    require(p.lambda >= 0.0 && std::isfinite(p.lambda), "simulation: lambda must be >= 0");
    require(p.k > 0.0 && std::isfinite(p.k), "simulation: k must be > 0");
}

double sample_summed_subordinator(const CattaneoParams& p, double s, Generator& gen) {
    validate_simulation(p);
    require(s >= 0.0 && std::isfinite(s), "sample_summed_subordinator: s must be >= 0");
    if (s == 0.0) return 0.0;
    return Summed(p).increment(s, gen);
}

double sample_inverse_subordinator(const CattaneoParams& p, double t, Generator& gen) {
    validate_simulation(p);
    require(t > 0.0 && std::isfinite(t), "sample_inverse_subordinator: t must be > 0");
    const double s1 = sample_stable({2.0 * p.beta, 1.0}, gen);
    const double s2 = sample_stable({p.beta, 1.0}, gen);
    const double c = std::pow(2.0 * p.k, 1.0 / p.beta);
    const double u = 2.0 * t / (s1 + std::sqrt(s1 * s1 + 4.0 * c * s2 * t));
    const double level = std::pow(u, 2.0 * p.beta);
    if (!(level > 0.0 && std::isfinite(level))) {
        throw SamplingError("sample_inverse_subordinator: crossing level is not finite and positive");
    }
    return level;
}

double sample_inverse_subordinator(const CattaneoParams& p, double t, const RngStream& rng) {
    Generator gen(rng);
    return sample_inverse_subordinator(p, t, gen);
}

double first_passage_on_grid(const CattaneoParams& p, double t, double ds, const RngStream& rng) {
    validate_simulation(p);
    require(t > 0.0 && std::isfinite(t), "first_passage_on_grid: t must be > 0");
    require(ds > 0.0 && std::isfinite(ds), "first_passage_on_grid: ds must be > 0");
    const Summed path(p);
    Generator gen(rng);
    double a = 0.0;
    for (long i = 1; i <= kMaxGridSteps; ++i) {
        a += path.increment(ds, gen);
        if (a >= t) return static_cast<double>(i) * ds;
    }
    throw SamplingError("first_passage_on_grid: step budget exhausted");
}

double sample_X(const CattaneoParams& p, double s, const RngStream& rng) {
    validate_simulation(p);
    require(s >= 0.0 && std::isfinite(s), "sample_X: s must be >= 0");
    double tau = 0.0;
    if (s > 0.0) {
        Generator gen(rng.substream(1));
        tau = sample_tempered({p.alpha, p.lambda, s}, gen);
    }
    Generator gauss(rng.substream(2));
    return std::sqrt(2.0 * tau) * gauss.normal();
}

double sample_W(const CattaneoParams& p, double t, const RngStream& rng) {
    Generator gen(rng.substream(0));
    const double level = sample_inverse_subordinator(p, t, gen);
    return sample_X(p, level, rng);
}

TrajectoryEnsemble run_ensemble(const CattaneoParams& p, double t, std::size_t n, const RngStream& seed,
                                unsigned threads, Observable what) {
    validate_simulation(p);
    require(n >= 1, "run_ensemble: n must be >= 1");
    require(t > 0.0 && std::isfinite(t), "run_ensemble: t must be > 0");

    TrajectoryEnsemble e;
    e.t = t;
    e.seed = seed;
    e.n = n;
    e.samples.assign(n, 0.0);

    auto draw = [&](std::size_t i) {
        const RngStream stream{seed.master_seed, seed.stream_id + i, 0};
        switch (what) {
            case Observable::W: return sample_W(p, t, stream);
            case Observable::inverse_subordinator: return sample_inverse_subordinator(p, t, stream);
            case Observable::X: return sample_X(p, t, stream);
        }
        return 0.0;
    };

    unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
        try {
            for (std::size_t i = w; i < n; i += workers) e.samples[i] = draw(i);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
    e.moments = stats::moments(e.samples);
    return e;
}

std::pair<Complex, double> empirical_cf(const TrajectoryEnsemble& e, double xi) {
    require(!e.samples.empty(), "empirical_cf: empty ensemble");
    const double n = static_cast<double>(e.samples.size());
    double c_sum = 0.0;
    double s_sum = 0.0;
    for (double x : e.samples) {
        c_sum += std::cos(xi * x);
        s_sum += std::sin(xi * x);
    }
    const double c_mean = c_sum / n;
    double ss = 0.0;
    for (double x : e.samples) {
        const double d = std::cos(xi * x) - c_mean;
        ss += d * d;
    }
    const double se = e.samples.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
    return {Complex(c_mean, s_sum / n), se};
}

}  // namespace cattaneo::sim
