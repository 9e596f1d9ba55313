#include "cattaneo/stable.hpp"

#include "cattaneo/errors.hpp"
#include "cattaneo/laplace.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cattaneo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxTries = 100000;

void validate(const StableParams& p) {
    detail::require(p.alpha > 0.0 && p.alpha < 1.0, "stable: alpha must lie in (0,1)");
    detail::require(p.t > 0.0 && std::isfinite(p.t), "stable: t must be > 0");
}

void validate(const TemperedParams& p) {
    validate(StableParams{p.alpha, p.t});
    detail::require(p.lambda >= 0.0 && std::isfinite(p.lambda), "tempered: lambda must be >= 0");
}

// Zolotarev's function A(u) for the one-sided law with unit scale.
double zolotarev_a(double alpha, double u) {
    const double ratio = std::sin(alpha * u) / std::sin(u);
    return std::pow(ratio, 1.0 / (1.0 - alpha)) * std::sin((1.0 - alpha) * u) / std::sin(alpha * u);
}

double sample_unit_time(double alpha, Generator& gen) {
    const double u = kPi * gen.uniform01();
    const double e = gen.exponential();
    const double a = std::sin(alpha * u) / std::pow(std::sin(u), 1.0 / alpha);
    return a * std::pow(std::sin((1.0 - alpha) * u) / e, (1.0 - alpha) / alpha);
}

}  // namespace

double sample_stable(const StableParams& p, Generator& gen) {
    validate(p);
    return std::pow(p.t, 1.0 / p.alpha) * sample_unit_time(p.alpha, gen);
}

double sample_stable(const StableParams& p, const RngStream& rng) {
    Generator gen(rng);
    return sample_stable(p, gen);
}

double sample_tempered(const TemperedParams& p, Generator& gen) {
    validate(p);
    if (p.lambda == 0.0) return sample_stable({p.alpha, p.t}, gen);

    const double mass = std::pow(p.lambda, p.alpha) * p.t;
    const int pieces = std::max(1, static_cast<int>(std::ceil(mass)));
    const StableParams piece{p.alpha, p.t / pieces};
    double total = 0.0;
    for (int i = 0; i < pieces; ++i) {
        int tries = 0;
        for (;; ++tries) {
            if (tries == kMaxTries) throw SamplingError("sample_tempered: rejection retry budget exhausted");
            const double x = sample_stable(piece, gen);
            if (gen.uniform01() <= std::exp(-p.lambda * x)) {
                total += x;
                break;
            }
        }
    }
    return total;
}

double sample_tempered(const TemperedParams& p, const RngStream& rng) {
    Generator gen(rng);
    return sample_tempered(p, gen);
}

double stable_density(const StableParams& p, double x) {
    validate(p);
    detail::require(x > 0.0 && std::isfinite(x), "stable_density: x must be > 0");
    const double alpha = p.alpha;
    const double t = p.t;
    const auto log_f = [alpha, t](transforms::Complex s) { return -t * std::pow(s, alpha); };
    try {
        const double v = transforms::laplace_invert_log(log_f, x);
        if (std::isfinite(v)) return std::max(v, 0.0);
    } catch (const ConvergenceError&) {
    }
    return detail::stable_density_zolotarev(p, x);
}

double tempered_density(const TemperedParams& p, double x) {
    validate(p);
    const double h = stable_density({p.alpha, p.t}, x);
    if (p.lambda == 0.0) return h;
    return std::exp(-p.lambda * x + std::pow(p.lambda, p.alpha) * p.t) * h;
}

double tempered_cdf(const TemperedParams& p, double x) {
    validate(p);
    if (x <= 0.0) return 0.0;
    const double alpha = p.alpha;
    const double lambda = p.lambda;
    const double t = p.t;
    const double shift = std::pow(lambda, alpha);
    const auto log_f = [=](transforms::Complex s) { return -t * (std::pow(s + lambda, alpha) - shift) - std::log(s); };
    return std::clamp(transforms::laplace_invert_log(log_f, x), 0.0, 1.0);
}

namespace detail {

double stable_density_zolotarev(const StableParams& p, double x) {
    validate(p);
    require(x > 0.0 && std::isfinite(x), "stable_density: x must be > 0");
    const double alpha = p.alpha;
    const double y = x * std::pow(p.t, -1.0 / alpha);
    const double c = std::pow(y, -alpha / (1.0 - alpha));
    const auto integrand = [&](double u) {
        const double a = zolotarev_a(alpha, u);
        const double v = a * std::exp(-c * a);
        return std::isfinite(v) ? v : 0.0;
    };
    const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, kPi, 15, 1e-13);
    // Far left tail: the integrand underflows while the prefactor overflows.
    if (integral == 0.0) return 0.0;
    const double unit = alpha / (1.0 - alpha) * std::pow(y, -1.0 / (1.0 - alpha)) * integral / kPi;
    return unit * std::pow(p.t, -1.0 / alpha);
}

}  // namespace detail
}  // namespace cattaneo
