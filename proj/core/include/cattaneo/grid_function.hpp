#pragma once

#include <cstddef>
#include <vector>

namespace cattaneo {

/// Samples of a real function on the uniform grid x_i = x0 + i*dx.
struct GridFunction {
    double x0 = 0.0;
    double dx = 1.0;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }

    /// Piecewise-linear interpolant; throws DomainError outside [x0, x_last].
    double interpolate(double x) const;

    template <class F>
    static GridFunction sample(F&& f, double x0, double dx, std::size_t n) {
        GridFunction g{x0, dx, {}};
        g.values.reserve(n);
        for (std::size_t i = 0; i < n; ++i) g.values.push_back(f(x0 + static_cast<double>(i) * dx));
        return g;
    }
};

}  // namespace cattaneo
