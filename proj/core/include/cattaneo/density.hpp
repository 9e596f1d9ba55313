#pragma once

#include "cattaneo/grid_function.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace cattaneo::transforms {

struct GridSpec {
    double x0 = 0.0;
    double dx = 0.01;
    std::size_t n = 0;
};

struct DensityResult {
    GridFunction density;
    /// Largest quadrature error estimate over the grid.
    double max_error_estimate = 0.0;
    std::vector<std::string> warnings;
};

/// Density of a symmetric law from its real, even characteristic function:
/// p(x) = (1/pi) int_0^inf cf(xi) cos(xi x) dxi.
///
/// Oscillatory quadrature (Ooura's double exponential cosine rule) for x != 0.
/// At x = 0 the integral is cut at the first decade where |cf| <= 1e-8 and
/// closed with a power-law tail fitted there. Evaluation happens at |x|, so the output is
/// exactly symmetric on symmetric grids. Rejects with DomainError a cf that
/// does not decay.
DensityResult cf_to_density(const std::function<double(double)>& cf, const GridSpec& grid);

/// Warning threshold for the quadrature error estimate.
inline constexpr double kDensityWarnTolerance = 1e-4;

}  // namespace cattaneo::transforms
