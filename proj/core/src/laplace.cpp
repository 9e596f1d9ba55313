#include "cattaneo/laplace.hpp"

#include "cattaneo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace cattaneo::transforms {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_finite(Complex v, const char* who) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw ConvergenceError(std::string(who) + ": transform returned a non-finite value");
    }
}

// Stehfest weights V_1..V_N, accumulated in long double.
std::vector<long double> stehfest_weights(int n) {
    const int half = n / 2;
    auto fact = [](int m) {
        long double r = 1.0L;
        for (int i = 2; i <= m; ++i) r *= i;
        return r;
    };
    std::vector<long double> v(n + 1, 0.0L);
    for (int k = 1; k <= n; ++k) {
        long double sum = 0.0L;
        for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
            sum += std::pow(static_cast<long double>(j), half) * fact(2 * j) /
                   (fact(half - j) * fact(j) * fact(j - 1) * fact(k - j) * fact(2 * j - k));
        }
        v[k] = ((k + half) % 2 == 0 ? 1.0L : -1.0L) * sum;
    }
    return v;
}

struct Estimate {
    double value = 0.0;
    // eps times the sum of absolute summands
    double noise = 0.0;
};

struct Source {
    const LaplaceTransform& f;
    bool log_form;

    Complex value(Complex s) const { return log_form ? std::exp(f(s)) : f(s); }
    // e^w F(s)
    Complex weighted(Complex s, Complex w) const { return log_form ? std::exp(w + f(s)) : std::exp(w) * f(s); }
};


Estimate talbot(const Source& src, double t, int nodes, double t_scale) {
    // Weideman's cotangent contour z(theta) = N (a theta cot(b theta) - c + i d theta).
    constexpr double a = 0.5017;
    constexpr double b = 0.6407;
    constexpr double c = 0.6122;
    constexpr double d = 0.2645;
    // Beyond 48 nodes the contour stops growing and extra nodes only refine the
    // trapezoidal rule; a larger contour would amplify rounding by e^{0.171 N}.
    const double n = nodes;
    const double m = std::min(n, 48.0);
    double sum = 0.0;
    double abs_sum = 0.0;
    for (int k = nodes / 2; k < nodes; ++k) {
        const double theta = -kPi + (k + 0.5) * 2.0 * kPi / n;
        const double cot = 1.0 / std::tan(b * theta);
        const double sin_b = std::sin(b * theta);
        const Complex z = m * Complex(a * theta * cot - c, d * theta);
        const Complex dz = m * Complex(a * cot - a * b * theta / (sin_b * sin_b), d);
        const Complex term = src.weighted(t_scale * z / t, t_scale * z) * dz;
        check_finite(term, "talbot");
        sum += term.imag();
        abs_sum += std::abs(term);
    }
    const double scale = 2.0 * t_scale / (n * t);
    return {scale * sum, scale * abs_sum * kEps};
}

Estimate dehoog(const Source& src, double t, int nodes) {
    const int m = nodes / 2;
    const double period = 4.0 * t;
    const double gamma = -0.5 * std::log(1e-12) / period;

    std::vector<Complex> fs(2 * m + 1);
    double abs_sum = 0.0;
    for (int i = 0; i <= 2 * m; ++i) {
        const Complex s(gamma, i * kPi / period);
        fs[i] = src.value(s);
        check_finite(fs[i], "dehoog");
        abs_sum += std::abs(fs[i]);
    }
    fs[0] *= 0.5;

    // Quotient-difference table; only the current and previous columns are kept.
    std::vector<Complex> e_prev(2 * m + 1, 0.0), q_prev(2 * m + 1, 0.0);
    std::vector<Complex> e_cur(2 * m + 1, 0.0), q_cur(2 * m + 1, 0.0);
    std::vector<Complex> dcoef(2 * m + 1);
    dcoef[0] = fs[0];
    for (int i = 0; i < 2 * m; ++i) q_prev[i] = fs[i + 1] / fs[i];
    for (int i = 0; i <= 2 * m - 2; ++i) e_cur[i] = q_prev[i + 1] - q_prev[i];
    dcoef[1] = -q_prev[0];
    dcoef[2] = -e_cur[0];
    e_prev = e_cur;
    for (int r = 2; r <= m; ++r) {
        for (int i = 0; i <= 2 * (m - r) + 1; ++i) q_cur[i] = q_prev[i + 1] * e_prev[i + 1] / e_prev[i];
        for (int i = 0; i <= 2 * (m - r); ++i) e_cur[i] = q_cur[i + 1] - q_cur[i] + e_prev[i + 1];
        dcoef[2 * r - 1] = -q_cur[0];
        dcoef[2 * r] = -e_cur[0];
        std::swap(q_prev, q_cur);
        std::swap(e_prev, e_cur);
    }

    const Complex z = std::polar(1.0, kPi * t / period);
    Complex a_prev2 = 0.0, a_prev = dcoef[0];
    Complex b_prev2 = 1.0, b_prev = 1.0;
    for (int n = 2; n <= 2 * m; ++n) {
        const Complex dz = dcoef[n - 1] * z;
        const Complex a_n = a_prev + dz * a_prev2;
        const Complex b_n = b_prev + dz * b_prev2;
        a_prev2 = a_prev;
        a_prev = a_n;
        b_prev2 = b_prev;
        b_prev = b_n;
    }
    // Tail estimate of the continued fraction.
    const Complex h = 0.5 * (1.0 + z * (dcoef[2 * m - 1] - dcoef[2 * m]));
    const Complex r = -h * (1.0 - std::sqrt(1.0 + z * dcoef[2 * m] / (h * h)));
    const Complex a_last = a_prev + r * a_prev2;
    const Complex b_last = b_prev + r * b_prev2;
    const double scale = std::exp(gamma * t) / period;
    const Complex value = a_last / b_last;
    if (!std::isfinite(value.real())) throw ConvergenceError("dehoog: continued fraction broke down");
    return {scale * value.real(), scale * abs_sum * kEps};
}

Estimate stehfest(const Source& src, double t, int order) {
    const auto v = stehfest_weights(order);
    const double ln2_t = std::numbers::ln2 / t;
    long double sum = 0.0L;
    double abs_sum = 0.0;
    for (int k = 1; k <= order; ++k) {
        const Complex fk = src.value(Complex(k * ln2_t, 0.0));
        check_finite(fk, "stehfest");
        sum += v[k] * static_cast<long double>(fk.real());
        abs_sum += std::abs(static_cast<double>(v[k]) * fk.real());
    }
    return {ln2_t * static_cast<double>(sum), ln2_t * abs_sum * kEps};
}

InversionResult invert(const Source& src, double t, const LaplaceInverterConfig& cfg) {
    cattaneo::detail::require(std::isfinite(t) && t > 0.0, "laplace_invert: t must be > 0");
    cattaneo::detail::require(cfg.rtol >= 0.0 && cfg.atol >= 0.0, "laplace_invert: tolerances must be >= 0");

    auto agree = [&](const Estimate& fine, const Estimate& coarse) {
        const double diff = std::abs(fine.value - coarse.value);
        const double allowed = cfg.rtol * std::abs(fine.value) + cfg.atol + 10.0 * (fine.noise + coarse.noise);
        return diff <= allowed;
    };

    if (cfg.method == InversionMethod::stehfest) {
        const int order = cfg.stehfest_order;
        cattaneo::detail::require(order >= 8 && order <= 20 && order % 2 == 0,
                                  "laplace_invert: Stehfest order must be even and in [8, 20]");
        const auto fine = stehfest(src, t, order);
        if (!cfg.check) return {fine.value, 0.0, order};
        const auto coarse = stehfest(src, t, order - 2);
        if (!agree(fine, coarse)) {
            throw ConvergenceError("laplace_invert: Stehfest orders " + std::to_string(order - 2) + " and " +
                                   std::to_string(order) + " disagree");
        }
        return {fine.value, std::abs(fine.value - coarse.value), order};
    }

    cattaneo::detail::require(cfg.nodes >= 16, "laplace_invert: at least 16 nodes required");
    cattaneo::detail::require(cfg.t_scale > 0.0 && std::isfinite(cfg.t_scale), "laplace_invert: t_scale must be > 0");
    auto run = [&](int nodes) {
        return cfg.method == InversionMethod::talbot ? talbot(src, t, nodes, cfg.t_scale) : dehoog(src, t, nodes);
    };

    int nodes = cfg.nodes;
    auto fine = run(nodes);
    if (!cfg.check) return {fine.value, 0.0, nodes};
    auto coarse = run(nodes / 2);
    for (int doubling = 0;; ++doubling) {
        if (agree(fine, coarse)) return {fine.value, std::abs(fine.value - coarse.value), nodes};
        if (doubling == cfg.max_doublings) break;
        coarse = fine;
        nodes *= 2;
        fine = run(nodes);
    }
    throw ConvergenceError("laplace_invert: no agreement between " + std::to_string(nodes / 2) + " and " +
                           std::to_string(nodes) + " nodes at t = " + std::to_string(t));
}

}  // namespace

InversionResult laplace_invert_detailed(const LaplaceTransform& f, double t, const LaplaceInverterConfig& cfg) {
    return invert(Source{f, false}, t, cfg);
}

double laplace_invert(const LaplaceTransform& f, double t, const LaplaceInverterConfig& cfg) {
    return invert(Source{f, false}, t, cfg).value;
}

InversionResult laplace_invert_log_detailed(const LaplaceTransform& log_f, double t, const LaplaceInverterConfig& cfg) {
    return invert(Source{log_f, true}, t, cfg);
}

double laplace_invert_log(const LaplaceTransform& log_f, double t, const LaplaceInverterConfig& cfg) {
    return invert(Source{log_f, true}, t, cfg).value;
}

}  // namespace cattaneo::transforms
