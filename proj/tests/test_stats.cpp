#include "cattaneo/errors.hpp"
#include "cattaneo/rng.hpp"
#include "cattaneo/stats.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace cattaneo;

TEST(Moments, SmallSample) {
    const auto m = stats::moments({1.0, 2.0, 3.0, 4.0});
    EXPECT_EQ(m.n, 4u);
    EXPECT_DOUBLE_EQ(m.mean, 2.5);
    EXPECT_DOUBLE_EQ(m.variance, 5.0 / 3.0);
    EXPECT_DOUBLE_EQ(m.std_error, std::sqrt(5.0 / 3.0 / 4.0));
}

TEST(Moments, VarianceStdErrorForNormal) {
    // For N(0,1), se(s^2) ~ sqrt(2/(n-1)).
    Generator g({1, 0, 0});
    std::vector<double> x(100000);
    for (auto& v : x) v = g.normal();
    EXPECT_NEAR(stats::variance_std_error(x), std::sqrt(2.0 / (x.size() - 1)), 2e-4);
}

TEST(Kolmogorov, SurvivalValues) {
    EXPECT_NEAR(stats::kolmogorov_survival(1.0), 0.26999967, 1e-6);
    EXPECT_NEAR(stats::kolmogorov_survival(1.36), 0.0494, 1e-3);
    EXPECT_EQ(stats::kolmogorov_survival(0.0), 1.0);
}

TEST(KsTest, AcceptsUniformAndRejectsShift) {
    Generator g({2, 0, 0});
    std::vector<double> x(5000);
    for (auto& v : x) v = g.uniform01();
    const auto uniform = [](double v) { return std::clamp(v, 0.0, 1.0); };
    EXPECT_GT(stats::ks_test(x, uniform).p_value, 0.01);
    for (auto& v : x) v = std::sqrt(v);
    EXPECT_LT(stats::ks_test(x, uniform).p_value, 1e-6);
}

TEST(ChiSquare, KnownStatistic) {
    const auto r = stats::chi_square({10, 20, 30}, {20, 20, 20});
    EXPECT_DOUBLE_EQ(r.statistic, 10.0);
    EXPECT_EQ(r.dof, 2);
    EXPECT_NEAR(r.p_value, std::exp(-5.0), 1e-12);
}

TEST(ChiSquare, PoolsSparseBins) {
    const auto r = stats::chi_square({1, 2, 50, 47}, {2, 2, 48, 48});
    EXPECT_EQ(r.dof, 1);
}

TEST(Rng, DeterministicAndIndependent) {
    Generator a({7, 1, 0}), b({7, 1, 0}), c({7, 2, 0}), d({7, 1, 1});
    for (int i = 0; i < 100; ++i) {
        const auto va = a();
        EXPECT_EQ(va, b());
        EXPECT_NE(va, c());
        EXPECT_NE(va, d());
    }
}

TEST(Rng, OpenUnitInterval) {
    Generator g({8, 0, 0});
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = g.uniform01();
        ASSERT_GT(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / n, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST(Rng, ExponentialAndNormalMoments) {
    Generator g({9, 0, 0});
    std::vector<double> e(100000), z(100000);
    for (auto& v : e) v = g.exponential();
    for (auto& v : z) v = g.normal();
    const auto me = stats::moments(e), mz = stats::moments(z);
    EXPECT_LE(std::abs(me.mean - 1.0), 4.0 * me.std_error);
    EXPECT_LE(std::abs(mz.mean), 4.0 * mz.std_error);
    EXPECT_LE(std::abs(mz.variance - 1.0), 4.0 * stats::variance_std_error(z));
}
