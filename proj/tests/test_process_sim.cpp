#include "cattaneo/analytic.hpp"
#include "cattaneo/errors.hpp"
#include "cattaneo/process_sim.hpp"
#include "cattaneo/stable.hpp"
#include "cattaneo/stats.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace cattaneo;

namespace {

const CattaneoParams kBase{0.7, 0.4, 1.0, 0.5};

// Two-sample Kolmogorov-Smirnov p-value from the asymptotic distribution.
double two_sample_ks(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(double(i) / a.size() - double(j) / b.size()));
    }
    const double ne = double(a.size()) * b.size() / (a.size() + b.size());
    return stats::kolmogorov_survival(std::sqrt(ne) * d);
}

}  // namespace

TEST(InverseSubordinator, MonotoneInTimeForFixedStream) {
    for (std::uint64_t id = 0; id < 50; ++id) {
        double prev = 0.0;
        for (double t = 0.05; t <= 5.0; t += 0.05) {
            const double l = sim::sample_inverse_subordinator(kBase, t, RngStream{3, id, 0});
            EXPECT_GE(l, prev);
            prev = l;
        }
    }
}

TEST(InverseSubordinator, MeanMatchesClosedForm) {
    for (double t : {0.5, 1.0, 2.0}) {
        const auto e = sim::run_ensemble(kBase, t, 20000, RngStream{4, 0, 0}, 0, sim::Observable::inverse_subordinator);
        const double u = analytic::mean_subordinator(kBase, t);
        EXPECT_LE(std::abs(e.moments.mean - u), 4.0 * e.moments.std_error) << "t=" << t;
    }
}

TEST(InverseSubordinator, InversionIdentity) {
    // P[L(t) > s] = P[A(s) < t]
    const double t = 1.0, s = 0.5;
    const std::size_t n = 20000;
    std::size_t above = 0, below = 0;
    Generator g({5, 1, 0});
    for (std::size_t i = 0; i < n; ++i) {
        if (sim::sample_inverse_subordinator(kBase, t, g) > s) ++above;
    }
    Generator h({5, 2, 0});
    for (std::size_t i = 0; i < n; ++i) {
        if (sim::sample_summed_subordinator(kBase, s, h) < t) ++below;
    }
    const double pa = double(above) / n, pb = double(below) / n;
    const double se = std::sqrt(pa * (1 - pa) / n + pb * (1 - pb) / n);
    EXPECT_LE(std::abs(pa - pb), 4.0 * se);
}

TEST(InverseSubordinator, AgreesWithPathReference) {
    const double t = 1.0;
    std::vector<double> exact(2000), grid(2000);
    for (std::size_t i = 0; i < exact.size(); ++i) {
        exact[i] = sim::sample_inverse_subordinator(kBase, t, RngStream{6, i, 0});
        grid[i] = sim::first_passage_on_grid(kBase, t, 1e-3, RngStream{7, i, 0});
    }
    EXPECT_GT(two_sample_ks(exact, grid), 0.01);
}

TEST(SampleX, ZeroAtOperationalTimeZero) {
    EXPECT_EQ(sim::sample_X(kBase, 0.0, RngStream{1, 0, 0}), 0.0);
}

TEST(SampleX, VarianceIsTwiceTemperedMean) {
    const auto e = sim::run_ensemble(kBase, 1.0, 20000, RngStream{8, 0, 0}, 0, sim::Observable::X);
    const double var = 2.0 * kBase.alpha * std::pow(kBase.lambda, kBase.alpha - 1.0);
    EXPECT_LE(std::abs(e.moments.variance - var), 4.0 * stats::variance_std_error(e.samples));
}

TEST(SampleW, SymmetricAndMatchesCharFn) {
    const double t = 1.0;
    const auto e = sim::run_ensemble(kBase, t, 20000, RngStream{9, 0, 0});
    EXPECT_LE(std::abs(e.moments.mean), 4.0 * e.moments.std_error);
    for (double xi : {0.5, 1.0, 2.0}) {
        const auto [cf, se] = sim::empirical_cf(e, xi);
        EXPECT_LE(std::abs(cf.real() - analytic::char_fn(kBase, xi, t).real()), 4.0 * se) << "xi=" << xi;
    }
}

TEST(SampleW, WrongCompositionIsDetected) {
    // Tempered time first, inverse subordinator second: not the model.
    const double t = 1.0, xi = 1.0;
    const std::size_t n = 20000;
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        const RngStream s{10, i, 0};
        const double tt = sample_tempered({kBase.alpha, kBase.lambda, t}, s.substream(1));
        const double l = sim::sample_inverse_subordinator(kBase, tt, s.substream(0));
        Generator g(s.substream(2));
        w[i] = std::sqrt(2.0 * l) * g.normal();
    }
    sim::TrajectoryEnsemble e;
    e.samples = w;
    e.n = n;
    const auto [cf, se] = sim::empirical_cf(e, xi);
    EXPECT_GT(std::abs(cf.real() - analytic::char_fn(kBase, xi, t).real()), 4.0 * se);
}

TEST(EmpiricalCf, UnitAtZeroAndConjugate) {
    const auto e = sim::run_ensemble(kBase, 0.5, 500, RngStream{11, 0, 0});
    const auto [one, se0] = sim::empirical_cf(e, 0.0);
    EXPECT_EQ(one, Complex(1.0, 0.0));
    EXPECT_EQ(se0, 0.0);
    const auto a = sim::empirical_cf(e, 0.8).first;
    const auto b = sim::empirical_cf(e, -0.8).first;
    EXPECT_EQ(a, std::conj(b));
}

TEST(Ensemble, IndependentOfThreadCount) {
    const RngStream seed{12, 100, 0};
    const auto a = sim::run_ensemble(kBase, 1.0, 1001, seed, 1);
    const auto b = sim::run_ensemble(kBase, 1.0, 1001, seed, 3);
    EXPECT_EQ(a.samples, b.samples);
    EXPECT_EQ(a.moments.mean, b.moments.mean);
    EXPECT_EQ(a.moments.variance, b.moments.variance);
}

TEST(Ensemble, TrajectoryStreams) {
    const RngStream seed{13, 40, 0};
    const auto e = sim::run_ensemble(kBase, 1.0, 3, seed, 1);
    for (std::uint64_t i = 0; i < 3; ++i) EXPECT_EQ(e.samples[i], sim::sample_W(kBase, 1.0, RngStream{13, 40 + i, 0}));
}

TEST(Ensemble, MeanCurveIncreases) {
    double prev = 0.0;
    for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const auto e = sim::run_ensemble(kBase, t, 2000, RngStream{14, 0, 0}, 0, sim::Observable::inverse_subordinator);
        EXPECT_GT(e.moments.mean, prev) << "t=" << t;
        prev = e.moments.mean;
    }
}

TEST(Simulation, RejectsUnsupportedParameters) {
    EXPECT_THROW(sim::validate_simulation({0.7, 0.6, 1.0, 0.5}), DomainError);
    EXPECT_THROW(sim::validate_simulation({0.7, 0.4, 1.0, 0.0}), DomainError);
    EXPECT_THROW(sim::validate_simulation({0.7, 0.4, -1.0, 0.5}), DomainError);
    EXPECT_THROW(sim::sample_W({0.7, 0.6, 1.0, 0.5}, 1.0, RngStream{}), DomainError);
    EXPECT_NO_THROW(sim::validate_simulation(kBase));
}
