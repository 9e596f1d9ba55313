#include "cattaneo/grid_function.hpp"

#include "cattaneo/errors.hpp"

#include <algorithm>
#include <cmath>

namespace cattaneo {

double GridFunction::interpolate(double x) const {
    detail::require(!values.empty(), "GridFunction::interpolate: empty grid");
    const double u = (x - x0) / dx;
    const double last = static_cast<double>(values.size() - 1);
    // Allow a rounding-sized overshoot at either end.
    detail::require(u >= -1e-9 && u <= last + 1e-9, "GridFunction::interpolate: x outside the grid");
    if (values.size() == 1) return values.front();
    const double clamped = std::clamp(u, 0.0, last);
    const auto i = std::min(static_cast<std::size_t>(clamped), values.size() - 2);
    const double w = clamped - static_cast<double>(i);
    return (1.0 - w) * values[i] + w * values[i + 1];
}

}  // namespace cattaneo
