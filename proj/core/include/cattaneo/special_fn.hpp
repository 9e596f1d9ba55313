#pragma once

#include <complex>

namespace cattaneo::special_fn {

using Complex = std::complex<double>;

/// Parameters of the two-parameter Mittag-Leffler function E_{beta,gamma}.
struct MLParams {
    double beta = 1.0;   ///< must be > 0
    double gamma = 1.0;  ///< any finite real
};

/// E_{beta,gamma}(z) = sum_k z^k / Gamma(beta k + gamma).
///
/// Taylor series inside |z| <= kSeriesRadius; outside it the function is
/// evaluated as the inverse Laplace transform of s^{beta-gamma}/(s^beta - z)
/// on an adaptively placed parabolic contour plus the residues of the poles
/// left outside the contour. Conjugate symmetry E(conj z) = conj E(z) is
/// exact, and real arguments give a real result. E_{1,1} is evaluated as exp.
///
/// Throws DomainError for beta <= 0, non-finite gamma or non-finite z.
Complex mittag_leffler(MLParams p, Complex z);

/// Real-argument form of mittag_leffler.
double mittag_leffler_real(MLParams p, double x);

/// 1/Gamma(x), zero at the poles of Gamma.
double rgamma(double x);

/// Kernel of the closed-form Dirichlet solution in the case k = lambda^{alpha/2}:
///
///   K(x, z) = (z / x^alpha) sum_{n>=0} (-y)^n / (Gamma(2n+2) Gamma(1 - alpha(n+1))),
///   y = z^2 / x^alpha,
///
/// i.e. the residue series of the Mellin-Barnes integral over the poles of
/// Gamma(1-w). K(., z) is the inverse Laplace transform (in x) of
/// eta^{alpha-1} z E_{2,2}(-eta^alpha z^2).
///
/// Requires alpha in (0,1), x > 0, z > 0. Throws ConvergenceError when the
/// series loses more than 8 digits to cancellation or fails to converge.
double dirichlet_kernel(double alpha, double x, double z);

namespace detail {

inline constexpr double kSeriesRadius = 1.0;

/// Power series branch; accurate for |z| <= kSeriesRadius.
Complex ml_series(MLParams p, Complex z);

/// Contour-integral branch; valid for any z != 0.
Complex ml_contour(MLParams p, Complex z);

}  // namespace detail
}  // namespace cattaneo::special_fn
