#include "cattaneo/caputo.hpp"

#include "cattaneo/errors.hpp"

#include <cmath>
#include <vector>

namespace cattaneo::transforms {

namespace {

void validate(const GridFunction& f, double alpha) {
    cattaneo::detail::require(alpha > 0.0 && alpha < 1.0, "caputo_l1: alpha must lie in (0,1)");
    cattaneo::detail::require(f.size() >= 4, "caputo_l1: grid needs at least 4 points");
    cattaneo::detail::require(f.dx > 0.0 && std::isfinite(f.dx), "caputo_l1: dx must be > 0");
}

}  // namespace

GridFunction caputo_l1(const GridFunction& f, double alpha) {
    validate(f, alpha);
    const std::size_t n = f.size();
    std::vector<double> b(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double md = static_cast<double>(m);
        b[m] = std::pow(md + 1.0, 1.0 - alpha) - std::pow(md, 1.0 - alpha);
    }
    std::vector<double> diff(n, 0.0);
    for (std::size_t j = 1; j < n; ++j) diff[j] = f.values[j] - f.values[j - 1];

    const double scale = std::pow(f.dx, -alpha) / std::tgamma(2.0 - alpha);
    GridFunction out{f.x0, f.dx, std::vector<double>(n, 0.0)};
    for (std::size_t i = 1; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= i; ++j) acc += b[i - j] * diff[j];
        out.values[i] = scale * acc;
    }
    return out;
}

GridFunction shifted_caputo(const GridFunction& f, double alpha, double lambda) {
    cattaneo::detail::require(lambda >= 0.0 && std::isfinite(lambda), "shifted_caputo: lambda must be >= 0");
    if (lambda == 0.0) return caputo_l1(f, alpha);
    GridFunction tilted = f;
    for (std::size_t i = 0; i < f.size(); ++i) {
        tilted.values[i] *= std::exp(lambda * static_cast<double>(i) * f.dx);
    }
    GridFunction out = caputo_l1(tilted, alpha);
    for (std::size_t i = 0; i < f.size(); ++i) {
        out.values[i] *= std::exp(-lambda * static_cast<double>(i) * f.dx);
    }
    return out;
}

}  // namespace cattaneo::transforms
