#include "cattaneo/density.hpp"

#include "cattaneo/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_map>

namespace cattaneo::transforms {

namespace {

// int_0^inf cf. Direct double-exponential rules on (0, inf) sample the cf far
// beyond where it can be evaluated to any relative accuracy, so the integral
// is cut at the first decade X with |cf(X)| <= 1e-8 and the rest is taken
// from the power law c xi^{-q} fitted at X and 2X.
double integral_at_zero(const std::function<double(double)>& cf, double& error) {
    using boost::math::quadrature::gauss_kronrod;
    double cut = 10.0;
    while (cut < 1e12 && std::abs(cf(cut)) > 1e-8) cut *= 10.0;
    double e1 = 0.0;
    double e2 = 0.0;
    const double head = gauss_kronrod<double, 31>::integrate(cf, 0.0, 1.0, 12, 1e-12, &e1);
    const auto log_scale = [&](double y) {
        const double xi = std::exp(y);
        return cf(xi) * xi;
    };
    const double body = gauss_kronrod<double, 31>::integrate(log_scale, 0.0, std::log(cut), 15, 1e-12, &e2);

    const double a = cf(cut);
    const double b = cf(2.0 * cut);
    const double c = cf(4.0 * cut);
    double tail = 0.0;
    double tail_error = std::abs(a) * cut;
    if (a != 0.0 && b != 0.0 && a * b > 0.0) {
        const double q = std::log(a / b) / std::log(2.0);
        if (!(q > 1.0)) throw DomainError("cf_to_density: characteristic function is not integrable");
        tail = a * cut / (q - 1.0);
        // The exponent fitted one octave further out measures how far the tail is from a pure power.
        if (c != 0.0 && b * c > 0.0) {
            const double q2 = std::log(b / c) / std::log(2.0);
            tail_error = q2 > 1.0 ? std::abs(tail - a * cut / (q2 - 1.0)) : std::abs(tail);
        }
    }
    error = e1 + e2 + tail_error;
    return head + body + tail;
}

}  // namespace

DensityResult cf_to_density(const std::function<double(double)>& cf, const GridSpec& grid) {
    cattaneo::detail::require(grid.n >= 1, "cf_to_density: empty grid");
    cattaneo::detail::require(grid.dx > 0.0 && std::isfinite(grid.dx) && std::isfinite(grid.x0),
                              "cf_to_density: invalid grid");
    for (double probe : {1e3, 1e6}) {
        const double v = cf(probe);
        cattaneo::detail::require(std::isfinite(v), "cf_to_density: characteristic function is not finite");
        if (probe == 1e6 && std::abs(v) > 1e-3) {
            throw DomainError("cf_to_density: characteristic function does not decay (|cf(1e6)| > 1e-3)");
        }
    }

    boost::math::quadrature::ooura_fourier_cos<double> cosine(1e-10);

    DensityResult result;
    result.density = GridFunction{grid.x0, grid.dx, std::vector<double>(grid.n, 0.0)};
    std::unordered_map<double, std::pair<double, double>> cache;
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double x = std::abs(grid.x0 + static_cast<double>(i) * grid.dx);
        auto it = cache.find(x);
        if (it == cache.end()) {
            double value = 0.0;
            double error = 0.0;
            if (x == 0.0) {
                value = integral_at_zero(cf, error);
            } else {
                const auto [v, e] = cosine.integrate(cf, x);
                value = v;
                error = e;
            }
            it = cache.emplace(x, std::make_pair(value / std::numbers::pi, error / std::numbers::pi)).first;
        }
        result.density.values[i] = it->second.first;
        result.max_error_estimate = std::max(result.max_error_estimate, it->second.second);
    }
    if (result.max_error_estimate > kDensityWarnTolerance) {
        std::ostringstream msg;
        msg << "cf_to_density: quadrature error estimate " << result.max_error_estimate << " exceeds "
            << kDensityWarnTolerance;
        result.warnings.push_back(msg.str());
    }
    return result;
}

}  // namespace cattaneo::transforms
