#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>

namespace test_oracles {

/// E_{beta,gamma}(x) from `terms` series terms in 50-digit arithmetic; throws
/// if the last term is not below 1e-30 of the sum.
inline double ml_series(double beta, double gamma, double x, int terms) {
    using Mp = boost::multiprecision::cpp_bin_float_50;
    Mp sum = 0, power = 1, last = 0;
    for (int n = 0; n < terms; ++n) {
        last = power / boost::multiprecision::tgamma(Mp(beta) * n + Mp(gamma));
        sum += last;
        power *= Mp(x);
    }
    if (abs(last) > Mp(1e-30) * (1 + abs(sum))) throw std::runtime_error("series oracle truncated too early");
    return static_cast<double>(sum);
}

/// Levy (alpha = 1/2) law with Laplace transform e^{-t sqrt(s)}.
inline double levy_density(double x, double t) {
    return t / (2.0 * std::sqrt(M_PI)) * std::pow(x, -1.5) * std::exp(-t * t / (4.0 * x));
}
inline double levy_cdf(double x, double t) { return x <= 0.0 ? 0.0 : std::erfc(t / (2.0 * std::sqrt(x))); }

}  // namespace test_oracles
