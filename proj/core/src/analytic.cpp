#include "cattaneo/analytic.hpp"

#include "cattaneo/errors.hpp"
#include "cattaneo/special_fn.hpp"

#include <cmath>
#include <limits>

namespace cattaneo::analytic {

namespace {

using detail::require;
using special_fn::mittag_leffler;

void check_space(const CattaneoParams& p) {
    require(p.alpha > 0.0 && p.alpha <= 1.0, "alpha must lie in (0,1]");
    require(p.lambda >= 0.0 && std::isfinite(p.lambda), "lambda must be >= 0");
}

void check_time(const CattaneoParams& p) {
    require(p.beta > 0.0 && p.beta < 1.0, "beta must lie in (0,1)");
    require(p.k >= 0.0 && std::isfinite(p.k), "k must be >= 0");
}

// (lambda + q)^alpha - lambda^alpha without cancellation for small q.
double tilted_power_difference(double lambda, double q, double alpha) {
    if (lambda == 0.0) return std::pow(q, alpha);
    return std::pow(lambda, alpha) * std::expm1(alpha * std::log1p(q / lambda));
}

Complex char_fn_at(const CattaneoParams& p, double theta, double t) {
    const Complex root = std::sqrt(Complex(p.k * p.k - theta, 0.0));
    const Complex w = p.k / root;
    const double tb = std::pow(t, p.beta);
    const special_fn::MLParams ml{p.beta, 1.0};
    const Complex e1 = mittag_leffler(ml, (-p.k + root) * tb);
    const Complex e2 = mittag_leffler(ml, (-p.k - root) * tb);
    return 0.5 * ((1.0 + w) * e1 + (1.0 - w) * e2);
}

Complex damped_oscillator(double k, Complex root, double t) {
    const Complex rt = root * t;
    Complex sinh_over_root;
    if (std::abs(rt) < 1e-3) {
        const Complex r2 = rt * rt;
        sinh_over_root = t * (1.0 + r2 / 6.0 + r2 * r2 / 120.0);
    } else {
        sinh_over_root = std::sinh(rt) / root;
    }
    return std::exp(-k * t) * (std::cosh(rt) + k * sinh_over_root);
}

}  // namespace

double theta(const CattaneoParams& p, double xi) {
    check_space(p);
    return tilted_power_difference(p.lambda, xi * xi, p.alpha);
}

double levy_exponent(const CattaneoParams& p, double xi) {
    check_space(p);
    return tilted_power_difference(p.lambda, 0.5 * xi * xi, p.alpha);
}

Complex subordinator_exponent(const CattaneoParams& p, Complex s) {
    check_time(p);
    const Complex sb = std::pow(s, p.beta);
    return sb * sb + 2.0 * p.k * sb;
}

SpectralSymbols spectral_symbols(const CattaneoParams& p, double xi) {
    SpectralSymbols out;
    out.theta = theta(p, xi);
    const Complex root = std::sqrt(Complex(p.k * p.k - out.theta, 0.0));
    out.r1 = -p.k + root;
    out.r2 = -p.k - root;
    out.psi = levy_exponent(p, xi);
    return out;
}

Complex char_fn(const CattaneoParams& p, double xi, double t) {
    check_space(p);
    check_time(p);
    require(p.k > 0.0, "char_fn: k must be > 0");
    require(std::isfinite(xi), "char_fn: xi must be finite");
    require(t >= 0.0 && std::isfinite(t), "char_fn: t must be >= 0");
    if (xi == 0.0 || t == 0.0) return {1.0, 0.0};

    const double th = theta(p, xi);
    if (!std::isfinite(th)) return {0.0, 0.0};
    const double k2 = p.k * p.k;
    if (std::abs(k2 - th) <= 1e-6 * k2) {
        const double lo = k2 * (1.0 - 2e-6);
        const double hi = k2 * (1.0 + 2e-6);
        const double w = (th - lo) / (hi - lo);
        return (1.0 - w) * char_fn_at(p, lo, t) + w * char_fn_at(p, hi, t);
    }
    return char_fn_at(p, th, t);
}

Complex fourier_laplace(const CattaneoParams& p, double xi, Complex s) {
    check_time(p);
    require(s != Complex(0.0, 0.0), "fourier_laplace: s must be nonzero");
    const Complex sb = std::pow(s, p.beta);
    const Complex phi = sb * sb + 2.0 * p.k * sb;
    return phi / s / (phi + theta(p, xi));
}

Complex l_beta_laplace(const CattaneoParams& p, double x, Complex s) {
    check_time(p);
    require(x >= 0.0 && std::isfinite(x), "l_beta_laplace: x must be >= 0");
    require(s != Complex(0.0, 0.0), "l_beta_laplace: s must be nonzero");
    const Complex sb = std::pow(s, p.beta);
    const Complex phi = sb * sb + 2.0 * p.k * sb;
    return phi / s * std::exp(-x * phi);
}

double mean_subordinator(const CattaneoParams& p, double t) {
    check_time(p);
    require(t >= 0.0 && std::isfinite(t), "mean_subordinator: t must be >= 0");
    if (t == 0.0) return 0.0;
    const double tb = std::pow(t, p.beta);
    return tb * tb * special_fn::mittag_leffler_real({p.beta, 2.0 * p.beta + 1.0}, -2.0 * p.k * tb);
}

double variance_formula(const CattaneoParams& p, double t) {
    check_space(p);
    const double u = mean_subordinator(p, t);
    if (p.lambda == 0.0) return p.alpha * (1.0 - p.alpha) * u;
    const double a = p.alpha;
    return a * std::pow(p.lambda, a - 2.0) * (1.0 - a + a * std::pow(p.lambda, a)) * u;
}

double variance_time_changed(const CattaneoParams& p, double t) {
    check_space(p);
    const double u = mean_subordinator(p, t);
    if (u == 0.0) return 0.0;
    if (p.lambda == 0.0) return p.alpha == 1.0 ? 2.0 * u : std::numeric_limits<double>::infinity();
    return 2.0 * p.alpha * std::pow(p.lambda, p.alpha - 1.0) * u;
}

Complex tempered_exponent(const CattaneoParams& p, Complex s) {
    check_space(p);
    return std::pow(s + p.lambda, p.alpha) - std::pow(p.lambda, p.alpha);
}

Complex beta1_space_laplace(const CattaneoParams& p, Complex s, double t) {
    require(p.k >= 0.0 && std::isfinite(p.k), "beta1_space_laplace: k must be >= 0");
    require(t >= 0.0 && std::isfinite(t), "beta1_space_laplace: t must be >= 0");
    if (t == 0.0) return {1.0, 0.0};
    const Complex root = std::sqrt(p.k * p.k + tempered_exponent(p, s));
    return damped_oscillator(p.k, root, t);
}

Complex beta1_space_laplace_printed(const CattaneoParams& p, Complex s, double t) {
    require(p.k >= 0.0 && std::isfinite(p.k), "beta1_space_laplace: k must be >= 0");
    require(t >= 0.0 && std::isfinite(t), "beta1_space_laplace: t must be >= 0");
    if (t == 0.0) return {1.0, 0.0};
    const Complex root = std::sqrt(p.k * p.k - tempered_exponent(p, s));
    return damped_oscillator(p.k, root, t);
}

}  // namespace cattaneo::analytic
