#include "cattaneo/caputo.hpp"
#include "cattaneo/dirichlet.hpp"
#include "cattaneo/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace cattaneo;
using dirichlet::BoundarySignal;

namespace {

const CattaneoParams kBase{0.7, 0.4, 1.0, 0.5};

}  // namespace

TEST(BoundarySignal, ParseAndTransforms) {
    const auto one = BoundarySignal::parse("one");
    EXPECT_EQ(one.value(3.0), 1.0);
    EXPECT_LE(std::abs(one.laplace(2.0) - 0.5), 1e-15);
    const auto e = BoundarySignal::parse("exp:2");
    EXPECT_NEAR(e.value(1.0), std::exp(-2.0), 1e-15);
    EXPECT_LE(std::abs(e.laplace(1.0) - 1.0 / 3.0), 1e-15);
    EXPECT_EQ(BoundarySignal::parse("zero").value(1.0), 0.0);
    EXPECT_EQ(BoundarySignal::parse("exp").rate, 1.0);
    EXPECT_THROW(BoundarySignal::parse("square"), DomainError);
    EXPECT_THROW(BoundarySignal::parse("exp:abc"), DomainError);
}

TEST(Dirichlet, RecoversBoundaryValue) {
    for (const char* name : {"one", "exp"}) {
        const auto phi = BoundarySignal::parse(name);
        for (double t : {0.5, 1.0, 2.0}) {
            EXPECT_NEAR(dirichlet::dirichlet_solution(kBase, 0.0, t, phi), phi.value(t), 1e-6) << name << " t=" << t;
        }
    }
}

TEST(Dirichlet, ZeroSignalGivesZeroField) {
    const auto phi = BoundarySignal::parse("zero");
    for (double x : {0.0, 0.5, 1.0}) EXPECT_EQ(dirichlet::dirichlet_solution(kBase, x, 1.0, phi), 0.0);
}

TEST(Dirichlet, AlphaOneTransform) {
    const CattaneoParams p{1.0, 0.4, 1.0, 0.5};
    const double s = 1.0, x = 0.3;
    const Complex phi = 1.0 / s;
    const Complex closed = phi * std::exp(-p.lambda * x - (s * s + 2.0 * p.k * s + p.lambda) * x);
    const Complex v = dirichlet::dirichlet_laplace(p, x, s, phi);
    EXPECT_LE(std::abs(v - closed), 1e-12 * std::abs(closed));
}

TEST(Dirichlet, ConvolutionAgreesWithInversion) {
    const CattaneoParams p{0.5, 0.4, 1.0, 1.0};
    const auto phi = GridFunction::sample([](double) { return 1.0; }, 0.0, 1e-3, 1201);
    const double x = 0.5, t = 1.0;
    const double conv = dirichlet::dirichlet_special_case(p, x, t, phi);
    const double inv = dirichlet::dirichlet_solution(p, x, t, BoundarySignal::parse("one"));
    EXPECT_NEAR(conv, inv, 1e-3 * std::abs(inv));
    EXPECT_GT(inv, 0.0);
    EXPECT_LT(inv, 1.0);
}

TEST(Dirichlet, SpecialCaseBoundaryAndGuards) {
    const CattaneoParams p{0.5, 0.4, 1.0, 1.0};
    const auto phi = GridFunction::sample([](double z) { return std::exp(-z); }, 0.0, 1e-3, 1201);
    EXPECT_NEAR(dirichlet::dirichlet_special_case(p, 0.0, 1.0, phi), std::exp(-1.0), 1e-12);
    EXPECT_THROW(dirichlet::dirichlet_special_case({0.5, 0.4, 1.0, 0.7}, 0.5, 1.0, phi), DomainError);
    EXPECT_THROW(dirichlet::dirichlet_special_case(p, 0.5, 0.0, phi), DomainError);
}

TEST(Dirichlet, RejectsBadArguments) {
    const auto phi = BoundarySignal::parse("one");
    EXPECT_THROW(dirichlet::dirichlet_solution(kBase, -0.1, 1.0, phi), DomainError);
    EXPECT_THROW(dirichlet::dirichlet_solution(kBase, 0.5, 0.0, phi), DomainError);
    EXPECT_THROW(dirichlet::dirichlet_solution({1.5, 0.4, 1.0, 0.5}, 0.5, 1.0, phi), DomainError);
}

TEST(Dirichlet, TransformIsShiftedCaputoEigenfunction) {
    const double s = 1.0;
    const double c = s * s + 2.0 * kBase.k * s + std::pow(kBase.lambda, kBase.alpha);
    const auto f = GridFunction::sample(
        [&](double x) { return dirichlet::dirichlet_laplace(kBase, x, s, 1.0 / s).real(); }, 0.0, 5e-4, 2001);
    const auto d = transforms::shifted_caputo(f, kBase.alpha, kBase.lambda);
    EXPECT_NEAR(d.values[1000], -c * f.values[1000], 1e-3);
}
