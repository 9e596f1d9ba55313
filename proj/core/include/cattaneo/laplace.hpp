#pragma once

#include <complex>
#include <functional>

namespace cattaneo::transforms {

using Complex = std::complex<double>;
using LaplaceTransform = std::function<Complex(Complex)>;

enum class InversionMethod { talbot, dehoog, stehfest };

struct LaplaceInverterConfig {
    InversionMethod method = InversionMethod::talbot;
    /// Contour points (Talbot) or 2M series terms (de Hoog); at least 16.
    int nodes = 48;
    /// Even, in [8, 20]. Double precision limits Stehfest to about 6-8 digits.
    int stehfest_order = 14;
    /// Multiplies the contour size; > 1 pushes the contour further left.
    double t_scale = 1.0;
    double rtol = 1e-8;
    double atol = 1e-13;
    /// Talbot and de Hoog double their node count at most this many times.
    int max_doublings = 2;
    /// Skip the coarse comparison and return a single estimate.
    bool check = true;
};

struct InversionResult {
    double value = 0.0;
    /// |difference| between the returned value and the coarser estimate.
    double error_estimate = 0.0;
    int nodes = 0;
};

/// Inverse Laplace transform of f at t > 0.
///
/// Talbot uses the Weideman cotangent contour and needs f analytic to the right
/// of it (all singularities on or near the negative real axis). de Hoog sums
/// the Fourier series on a vertical line with quotient-difference acceleration.
/// Stehfest samples f only on the positive real axis.
///
/// Each method compares against a coarser run (half the nodes; order - 2 for
/// Stehfest) and throws ConvergenceError when the two disagree by more than
/// rtol*|value| + atol + rounding noise after the allowed node doublings.
InversionResult laplace_invert_detailed(const LaplaceTransform& f, double t, const LaplaceInverterConfig& cfg = {});

double laplace_invert(const LaplaceTransform& f, double t, const LaplaceInverterConfig& cfg = {});

/// Same, for a transform supplied as log f(s). Talbot then combines the
/// exponent with e^{st} before exponentiating, so transforms such as
/// e^{-s^alpha} that overflow on the contour's left arms stay usable.
InversionResult laplace_invert_log_detailed(const LaplaceTransform& log_f, double t,
                                            const LaplaceInverterConfig& cfg = {});

double laplace_invert_log(const LaplaceTransform& log_f, double t, const LaplaceInverterConfig& cfg = {});

}  // namespace cattaneo::transforms
