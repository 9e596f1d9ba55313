#include "cattaneo/errors.hpp"
#include "cattaneo/laplace.hpp"
#include "cattaneo/special_fn.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace cattaneo;
using transforms::Complex;
using transforms::InversionMethod;
using transforms::LaplaceInverterConfig;

TEST(Laplace, ExponentialPair) {
    for (double t : {0.1, 0.5, 1.0, 3.0, 10.0}) {
        EXPECT_NEAR(transforms::laplace_invert([](Complex s) { return 1.0 / (s + 1.0); }, t), std::exp(-t),
                    1e-8 * std::exp(-t))
            << "t=" << t;
    }
}

TEST(Laplace, FractionalPower) {
    EXPECT_NEAR(transforms::laplace_invert([](Complex s) { return std::pow(s, -1.4); }, 1.0), 1.0 / std::tgamma(1.4),
                1e-10);
    EXPECT_NEAR(transforms::laplace_invert([](Complex s) { return std::pow(s, -0.5); }, 2.0),
                std::pow(2.0, -0.5) / std::tgamma(0.5), 1e-10);
}

TEST(Laplace, MittagLefflerPair) {
    // s^{b-1} / (s^b + 1)  <->  E_b(-t^b)
    for (double b : {0.3, 0.6, 0.9}) {
        for (double t : {0.2, 1.0, 4.0}) {
            const double inv =
                transforms::laplace_invert([&](Complex s) { return std::pow(s, b - 1.0) / (std::pow(s, b) + 1.0); }, t);
            const double direct = special_fn::mittag_leffler_real({b, 1.0}, -std::pow(t, b));
            EXPECT_NEAR(inv, direct, 1e-7 * std::abs(direct)) << "b=" << b << " t=" << t;
        }
    }
}

TEST(Laplace, DeHoogAgreesWithTalbot) {
    LaplaceInverterConfig dh;
    dh.method = InversionMethod::dehoog;
    const auto f = [](Complex s) { return std::pow(s, -0.3) / (std::pow(s, 0.7) + 2.0); };
    for (double t : {0.5, 1.0, 2.0}) {
        const double a = transforms::laplace_invert(f, t);
        const double b = transforms::laplace_invert(f, t, dh);
        EXPECT_NEAR(a, b, 1e-7 * std::abs(a)) << "t=" << t;
    }
}

TEST(Laplace, StehfestOnSmoothTransform) {
    LaplaceInverterConfig st;
    st.method = InversionMethod::stehfest;
    st.rtol = 1e-4;
    EXPECT_NEAR(transforms::laplace_invert([](Complex s) { return 1.0 / (s + 1.0); }, 1.0, st), std::exp(-1.0), 1e-5);
}

TEST(Laplace, NodeDoublingConverges) {
    const auto f = [](Complex s) { return 1.0 / (s * s + 1.0) / s; };  // 1 - cos t
    LaplaceInverterConfig a, b;
    a.nodes = 32;
    b.nodes = 64;
    const double t = 2.0;
    const double va = transforms::laplace_invert(f, t, a);
    const double vb = transforms::laplace_invert(f, t, b);
    EXPECT_LT(std::abs(va - vb), 1e-9);
    EXPECT_NEAR(vb, 1.0 - std::cos(t), 1e-9);
}

TEST(Laplace, DetailedReportsNodesAndError) {
    const auto r = transforms::laplace_invert_detailed([](Complex s) { return 1.0 / (s + 1.0); }, 1.0);
    EXPECT_GE(r.nodes, 48);
    EXPECT_LT(r.error_estimate, 1e-8);
}

TEST(Laplace, LogFormHandlesStableTransform) {
    // e^{-s^{1/2}}  <->  Levy density at t = 1
    for (double x : {0.05, 0.5, 2.0, 20.0}) {
        const double v = transforms::laplace_invert_log([](Complex s) { return -std::sqrt(s); }, x);
        const double oracle = test_oracles::levy_density(x, 1.0);
        EXPECT_NEAR(v, oracle, 1e-8 * oracle) << "x=" << x;
    }
}

TEST(Laplace, ReportsNonConvergence) {
    // A pure delay e^{-s} has a jump at t = 1 that no contour resolves.
    LaplaceInverterConfig cfg;
    cfg.max_doublings = 0;
    EXPECT_THROW(transforms::laplace_invert([](Complex s) { return std::exp(-s) / s; }, 1.0, cfg), ConvergenceError);
}

TEST(Laplace, RejectsBadTime) {
    EXPECT_THROW(transforms::laplace_invert([](Complex s) { return 1.0 / s; }, 0.0), DomainError);
    EXPECT_THROW(transforms::laplace_invert([](Complex s) { return 1.0 / s; }, -1.0), DomainError);
}
