#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace cattaneo::stats {

struct Moments {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;  ///< unbiased
    double std_error = 0.0; ///< of the mean
};

/// Two-pass moments, summed in input order.
Moments moments(const std::vector<double>& x);

/// Standard error of the unbiased sample variance, from the fourth central moment.
double variance_std_error(const std::vector<double>& x);

struct KsResult {
    double statistic = 0.0;
    double p_value = 0.0;
};

/// One-sample Kolmogorov-Smirnov test against a continuous cdf. The p-value
/// uses the asymptotic Kolmogorov series at sqrt(n) D with Stephens'
/// small-sample correction.
KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf);

/// P(K > x) for the Kolmogorov distribution.
double kolmogorov_survival(double x);

struct ChiSquareResult {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 0.0;
};

/// Pearson goodness of fit of observed counts against expected counts.
/// Bins with expected count below 5 are pooled with their right neighbour
/// (the last bin merges left). dof = bins - 1 - fitted_parameters.
ChiSquareResult chi_square(const std::vector<double>& observed, const std::vector<double>& expected,
                           int fitted_parameters = 0);

}  // namespace cattaneo::stats
