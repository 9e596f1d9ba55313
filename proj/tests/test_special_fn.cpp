#include "cattaneo/errors.hpp"
#include "cattaneo/laplace.hpp"
#include "cattaneo/rng.hpp"
#include "cattaneo/special_fn.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>
#include <numbers>

using cattaneo::special_fn::Complex;
using cattaneo::special_fn::MLParams;
using cattaneo::special_fn::mittag_leffler;
using cattaneo::special_fn::mittag_leffler_real;

namespace {

// Complex series in 200-digit arithmetic, run until the terms are negligible.
Complex ml_series_complex(double beta, double gamma, Complex z) {
    using Mp = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;
    Mp re = 0, im = 0, pr = 1, pi = 0;
    const Mp zr = z.real(), zi = z.imag();
    for (int n = 0; n < 20000; ++n) {
        const Mp g = boost::multiprecision::tgamma(Mp(beta) * n + Mp(gamma));
        const Mp tr = pr / g, ti = pi / g;
        re += tr;
        im += ti;
        if (n > 10 && abs(tr) + abs(ti) < Mp(1e-40) * (1 + abs(re) + abs(im))) {
            return {static_cast<double>(re), static_cast<double>(im)};
        }
        const Mp nr = pr * zr - pi * zi;
        pi = pr * zi + pi * zr;
        pr = nr;
    }
    throw std::runtime_error("complex series oracle did not converge");
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST(MittagLeffler, ExponentialCase) {
    EXPECT_NEAR(mittag_leffler({1.0, 1.0}, 1.0).real(), 2.718281828459045, 1e-15);
}

TEST(MittagLeffler, CosineZero) {
    const double x = std::numbers::pi * std::numbers::pi / 4.0;
    EXPECT_LE(std::abs(mittag_leffler({2.0, 1.0}, -x)), 1e-12);
}

TEST(MittagLeffler, SeriesOracle400Terms) {
    const double oracle = test_oracles::ml_series(0.7, 1.0, -3.2, 400);
    EXPECT_NEAR(mittag_leffler_real({0.7, 1.0}, -3.2), oracle, 1e-10 * std::abs(oracle));
}

TEST(MittagLeffler, RealFastPathExamples) {
    EXPECT_DOUBLE_EQ(mittag_leffler_real({0.4, 1.8}, 0.0), 1.0 / std::tgamma(1.8));
    EXPECT_NEAR(mittag_leffler_real({1.0, 2.0}, -2.0), (1.0 - std::exp(-2.0)) / 2.0, 1e-14);
    const double oracle = test_oracles::ml_series(0.4, 1.8, -5.0, 900);
    EXPECT_NEAR(mittag_leffler_real({0.4, 1.8}, -5.0), oracle, 1e-10 * std::abs(oracle));
}

struct MLCase {
    double beta, gamma;
    Complex z;
};

class MittagLefflerOracle : public ::testing::TestWithParam<MLCase> {};

TEST_P(MittagLefflerOracle, MatchesExtendedPrecisionSeries) {
    const auto c = GetParam();
    const Complex oracle = ml_series_complex(c.beta, c.gamma, c.z);
    const double tol = (c.z.real() <= 0.0 && std::abs(c.z) <= 50.0) ? 1e-10 : 1e-8;
    EXPECT_LE(rel(mittag_leffler({c.beta, c.gamma}, c.z), oracle), tol)
        << "beta=" << c.beta << " gamma=" << c.gamma << " z=" << c.z;
}

INSTANTIATE_TEST_SUITE_P(Grid, MittagLefflerOracle,
                         ::testing::Values(MLCase{0.9, 1.0, {-10.0, 20.0}}, MLCase{0.8, 1.0, {-40.0, 3.0}},
                                           MLCase{0.7, 1.0, {0.0, 5.0}}, MLCase{1.5, 1.0, {3.0, 4.0}},
                                           MLCase{0.7, 1.0, {2.0, 2.0}}, MLCase{2.0, 2.0, {-100.0, 5.0}},
                                           MLCase{0.5, 1.0, {-3.0, -4.0}}, MLCase{0.95, 0.5, {-20.0, 0.0}},
                                           MLCase{0.4, 1.8, {-2.0, 1.5}}, MLCase{0.4, 1.0, {-1.3, 0.7}},
                                           MLCase{0.6, 2.2, {-12.0, -9.0}}, MLCase{1.0, 2.0, {-30.0, 0.0}}));

TEST(MittagLeffler, CrossoverSeamless) {
    cattaneo::Generator gen({11, 0, 0});
    for (int i = 0; i < 100; ++i) {
        const MLParams p{0.3 + 1.7 * gen.uniform01(), 0.5 + 1.5 * gen.uniform01()};
        const double phase = 2.0 * std::numbers::pi * gen.uniform01();
        const Complex z = std::polar(cattaneo::special_fn::detail::kSeriesRadius, phase);
        const Complex a = cattaneo::special_fn::detail::ml_series(p, z);
        const Complex b = cattaneo::special_fn::detail::ml_contour(p, z);
        EXPECT_LE(rel(a, b), 1e-8) << "beta=" << p.beta << " gamma=" << p.gamma << " z=" << z;
    }
}

TEST(MittagLeffler, OneAtZero) {
    for (double beta : {0.1, 0.4, 0.7, 1.0, 1.5, 2.0, 3.0}) EXPECT_EQ(mittag_leffler({beta, 1.0}, 0.0), Complex(1.0, 0.0));
}

TEST(MittagLeffler, CompletelyMonotoneOnNegativeAxis) {
    for (double beta : {0.2, 0.5, 0.8, 1.0}) {
        double prev = 1.0;
        for (double x = 0.0; x <= 50.0; x += 0.25) {
            const double v = mittag_leffler_real({beta, 1.0}, -x);
            EXPECT_GT(v, 0.0);
            EXPECT_LE(v, 1.0);
            EXPECT_LE(v, prev + 1e-15) << "beta=" << beta << " x=" << x;
            prev = v;
        }
    }
}

TEST(MittagLeffler, ConjugateSymmetryAndRealAxis) {
    for (Complex z : {Complex(-3.0, 2.0), Complex(0.5, 0.3), Complex(7.0, -11.0)}) {
        const MLParams p{0.6, 1.3};
        EXPECT_EQ(mittag_leffler(p, std::conj(z)), std::conj(mittag_leffler(p, z)));
    }
    EXPECT_EQ(mittag_leffler({0.4, 1.8}, Complex(-7.0, 0.0)).imag(), 0.0);
    EXPECT_EQ(mittag_leffler({0.4, 1.8}, Complex(7.0, 0.0)).imag(), 0.0);
}

TEST(MittagLeffler, RejectsBadInput) {
    EXPECT_THROW(mittag_leffler({0.0, 1.0}, 1.0), cattaneo::DomainError);
    EXPECT_THROW(mittag_leffler({-1.0, 1.0}, 1.0), cattaneo::DomainError);
    EXPECT_THROW(mittag_leffler({0.5, NAN}, 1.0), cattaneo::DomainError);
    EXPECT_THROW(mittag_leffler({0.5, 1.0}, Complex(INFINITY, 0.0)), cattaneo::DomainError);
}

TEST(Gamma, ReciprocalVanishesAtPoles) {
    for (double x : {0.0, -1.0, -2.0, -7.0}) EXPECT_EQ(cattaneo::special_fn::rgamma(x), 0.0);
    EXPECT_NEAR(cattaneo::special_fn::rgamma(0.5), 1.0 / std::sqrt(std::numbers::pi), 1e-15);
    EXPECT_NEAR(cattaneo::special_fn::rgamma(-0.5), -0.5 / std::sqrt(std::numbers::pi), 1e-15);
}

TEST(DirichletKernel, SineFormOfTransform) {
    // z E_{2,2}(-w z^2) = sin(z sqrt(w)) / sqrt(w)
    for (double w : {0.3, 1.0, 2.5}) {
        for (double z : {0.5, 1.0, 3.0}) {
            const double lhs = z * mittag_leffler_real({2.0, 2.0}, -w * z * z);
            EXPECT_NEAR(lhs, std::sin(z * std::sqrt(w)) / std::sqrt(w), 1e-13);
        }
    }
}

// K(., z) is the inverse Laplace transform in x of eta^{alpha-1} z E_{2,2}(-eta^alpha z^2),
// computed here by Talbot inversion of the sine form.
TEST(DirichletKernel, ForwardTransformOracle) {
    for (double alpha : {0.5, 0.7}) {
        for (double x : {0.5, 1.0, 2.0}) {
            for (double z : {0.25, 0.5, 1.0}) {
                const auto f = [&](Complex eta) {
                    const Complex w = std::pow(eta, alpha / 2.0);
                    return std::pow(eta, alpha / 2.0 - 1.0) * std::sin(z * w);
                };
                const double oracle = cattaneo::transforms::laplace_invert(f, x);
                const double k = cattaneo::special_fn::dirichlet_kernel(alpha, x, z);
                EXPECT_NEAR(k, oracle, 1e-6 * std::abs(oracle)) << "alpha=" << alpha << " x=" << x << " z=" << z;
            }
        }
    }
}

TEST(DirichletKernel, LeadingTermForLargeX) {
    // For x^alpha >> z^2 only the first residue survives: z / (x^alpha Gamma(1 - alpha)).
    const double alpha = 0.5, z = 1.0, x = 1e8;
    const double lead = z / (std::pow(x, alpha) * std::tgamma(1.0 - alpha));
    EXPECT_NEAR(cattaneo::special_fn::dirichlet_kernel(alpha, x, z) / lead, 1.0, 1e-6);
}

TEST(DirichletKernel, RealAndFiniteOnGrid) {
    for (double x : {0.1, 0.5, 1.0, 4.0}) {
        for (double z : {0.1, 0.5, 1.0}) EXPECT_TRUE(std::isfinite(cattaneo::special_fn::dirichlet_kernel(0.6, x, z)));
    }
}

TEST(DirichletKernel, Errors) {
    using cattaneo::special_fn::dirichlet_kernel;
    EXPECT_THROW(dirichlet_kernel(0.5, 1.0, 0.0), cattaneo::DomainError);
    EXPECT_THROW(dirichlet_kernel(0.5, 0.0, 1.0), cattaneo::DomainError);
    EXPECT_THROW(dirichlet_kernel(1.0, 1.0, 1.0), cattaneo::DomainError);
    // Far inside the oscillatory regime the series cancels catastrophically.
    EXPECT_THROW(dirichlet_kernel(0.5, 1e-6, 5.0), cattaneo::ConvergenceError);
}
