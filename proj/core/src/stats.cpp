#include "cattaneo/stats.hpp"

#include "cattaneo/errors.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cattaneo::stats {

Moments moments(const std::vector<double>& x) {
    Moments m;
    m.n = x.size();
    if (x.empty()) return m;
    double sum = 0.0;
    for (double v : x) sum += v;
    m.mean = sum / static_cast<double>(m.n);
    if (m.n < 2) return m;
    double ss = 0.0;
    for (double v : x) ss += (v - m.mean) * (v - m.mean);
    m.variance = ss / static_cast<double>(m.n - 1);
    m.std_error = std::sqrt(m.variance / static_cast<double>(m.n));
    return m;
}

double variance_std_error(const std::vector<double>& x) {
    const Moments m = moments(x);
    if (m.n < 4) return 0.0;
    double m4 = 0.0;
    for (double v : x) {
        const double d = v - m.mean;
        m4 += d * d * d * d;
    }
    const double n = static_cast<double>(m.n);
    m4 /= n;
    const double s2 = m.variance;
    return std::sqrt(std::max(0.0, (m4 - (n - 3.0) / (n - 1.0) * s2 * s2) / n));
}

double kolmogorov_survival(double x) {
    if (x <= 0.0) return 1.0;
    if (x < 0.3) {
        // Jacobi theta form of the cdf; the alternating series converges too slowly here.
        const double pi = std::numbers::pi;
        double cdf = 0.0;
        for (int k = 1; k <= 50; ++k) {
            const double odd = 2.0 * k - 1.0;
            cdf += std::exp(-odd * odd * pi * pi / (8.0 * x * x));
        }
        return 1.0 - std::sqrt(2.0 * pi) / x * cdf;
    }
    double sum = 0.0;
    for (int k = 1; k <= 200; ++k) {
        const double term = std::exp(-2.0 * k * k * x * x);
        sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
        if (term < 1e-18) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf) {
    detail::require(!samples.empty(), "ks_test: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    const double root = std::sqrt(n);
    return {d, kolmogorov_survival((root + 0.12 + 0.11 / root) * d)};
}

ChiSquareResult chi_square(const std::vector<double>& observed, const std::vector<double>& expected,
                           int fitted_parameters) {
    detail::require(observed.size() == expected.size() && !observed.empty(), "chi_square: size mismatch");
    std::vector<double> obs;
    std::vector<double> exp;
    double o_acc = 0.0;
    double e_acc = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        o_acc += observed[i];
        e_acc += expected[i];
        if (e_acc >= 5.0) {
            obs.push_back(o_acc);
            exp.push_back(e_acc);
            o_acc = e_acc = 0.0;
        }
    }
    if (e_acc > 0.0 || o_acc > 0.0) {
        if (exp.empty()) {
            obs.push_back(o_acc);
            exp.push_back(e_acc);
        } else {
            obs.back() += o_acc;
            exp.back() += e_acc;
        }
    }
    ChiSquareResult r;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double diff = obs[i] - exp[i];
        r.statistic += diff * diff / exp[i];
    }
    r.dof = static_cast<int>(obs.size()) - 1 - fitted_parameters;
    detail::require(r.dof >= 1, "chi_square: not enough bins after pooling");
    const boost::math::chi_squared dist(r.dof);
    r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
    return r;
}

}  // namespace cattaneo::stats
