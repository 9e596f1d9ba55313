#include "cattaneo/errors.hpp"
#include "cattaneo/special_fn.hpp"

#include <cmath>
#include <numbers>

namespace cattaneo::special_fn {

namespace {

// log|1/Gamma(1-m)| and its sign; the reflection formula covers m >= 1.
struct LogRgamma {
    double log_abs = 0.0;
    int sign = 0;
};

LogRgamma log_rgamma_one_minus(double m) {
    LogRgamma r;
    if (m < 1.0) {
        r.log_abs = -std::lgamma(1.0 - m);
        r.sign = 1;
        return r;
    }
    const double s = std::sin(std::numbers::pi * m);
    if (s == 0.0 || m == std::nearbyint(m)) return r;
    r.log_abs = std::lgamma(m) + std::log(std::abs(s)) - std::log(std::numbers::pi);
    r.sign = s > 0.0 ? 1 : -1;
    return r;
}

}  // namespace

double dirichlet_kernel(double alpha, double x, double z) {
    cattaneo::detail::require(alpha > 0.0 && alpha < 1.0, "dirichlet_kernel: alpha must lie in (0,1)");
    cattaneo::detail::require(std::isfinite(x) && x > 0.0, "dirichlet_kernel: x must be > 0");
    cattaneo::detail::require(std::isfinite(z) && z > 0.0, "dirichlet_kernel: z must be > 0");

    const double log_y = 2.0 * std::log(z) - alpha * std::log(x);
    constexpr int kMaxTerms = 4000;
    double sum = 0.0;
    double largest = 0.0;
    for (int n = 0; n < kMaxTerms; ++n) {
        const LogRgamma rg = log_rgamma_one_minus(alpha * (n + 1));
        const double log_term = n * log_y - std::lgamma(2.0 * n + 2.0) + rg.log_abs;
        const double magnitude = rg.sign == 0 ? 0.0 : std::exp(log_term);
        const double term = (n % 2 == 0 ? 1.0 : -1.0) * rg.sign * magnitude;
        sum += term;
        largest = std::max(largest, magnitude);
        // log_term is eventually decreasing: Gamma(2n+2) outgrows Gamma(alpha n) y^n.
        const bool past_peak = 2.0 * std::log(2.0 * n + 2.0) > log_y + alpha * std::log(alpha * (n + 1) + 1.0);
        if (past_peak && n > 2 && magnitude <= 1e-17 * std::max(largest, std::abs(sum)) && rg.sign != 0) {
            if (std::abs(sum) * 1e8 < largest) {
                throw ConvergenceError("dirichlet_kernel: residue series lost more than 8 digits to cancellation");
            }
            return z * std::exp(-alpha * std::log(x)) * sum;
        }
    }
    throw ConvergenceError("dirichlet_kernel: residue series did not converge");
}

}  // namespace cattaneo::special_fn
