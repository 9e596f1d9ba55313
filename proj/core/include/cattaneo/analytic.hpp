#pragma once

#include <complex>

namespace cattaneo {

using Complex = std::complex<double>;

/// Parameters of the tempered space-fractional Cattaneo model.
struct CattaneoParams {
    double alpha = 0.7;   ///< space order, (0,1]; 1 removes the tempering
    double beta = 0.4;    ///< time order, (0,1); simulation needs (0,1/2)
    double lambda = 1.0;  ///< tempering rate, >= 0
    double k = 0.5;       ///< damping, > 0
};

namespace analytic {

/// theta(xi) = (lambda + xi^2)^alpha - lambda^alpha, the symbol of the
/// tempered operator with the variance-2t Brownian convention.
double theta(const CattaneoParams& p, double xi);

/// (xi^2/2 + lambda)^alpha - lambda^alpha, the exponent for unit-variance
/// Brownian motion. Not used by char_fn; levy_exponent(p, sqrt(2) xi) == theta(p, xi).
double levy_exponent(const CattaneoParams& p, double xi);

/// Laplace exponent of the time change, s^{2 beta} + 2k s^beta.
Complex subordinator_exponent(const CattaneoParams& p, Complex s);

struct SpectralSymbols {
    double theta = 0.0;
    Complex r1;  ///< -k + sqrt(k^2 - theta)
    Complex r2;  ///< -k - sqrt(k^2 - theta)
    double psi = 0.0;  ///< levy_exponent
};

SpectralSymbols spectral_symbols(const CattaneoParams& p, double xi);

/// Characteristic function u(xi, t) of W(t):
/// 1/2 [(1 + k/R) E_beta(r1 t^beta) + (1 - k/R) E_beta(r2 t^beta)],  R = sqrt(k^2 - theta).
///
/// When k^2 < theta the two halves are exact conjugates, so the imaginary
/// part cancels to zero. Within 1e-6 k^2 of the confluent point k^2 = theta
/// the value is interpolated linearly between theta = k^2 (1 -+ 2e-6).
/// xi = 0 returns exactly 1; once theta(xi) overflows the limit 0 is returned. Needs beta in (0,1), k > 0, t >= 0.
Complex char_fn(const CattaneoParams& p, double xi, double t);

/// Laplace transform in t of char_fn:
/// (s^{2beta-1} + 2k s^{beta-1}) / (s^{2beta} + 2k s^beta + theta(xi)).
/// Uses the principal branch of s^beta, which continues analytically onto
/// the Talbot contour.
Complex fourier_laplace(const CattaneoParams& p, double xi, Complex s);

/// Laplace transform in t of the density of the inverse subordinator at level x:
/// (s^{2beta-1} + 2k s^{beta-1}) exp(-x (s^{2beta} + 2k s^beta)).
Complex l_beta_laplace(const CattaneoParams& p, double x, Complex s);

/// U(t) = E[L(t)] = t^{2beta} E_{beta, 2beta+1}(-2k t^beta). Accepts k >= 0.
double mean_subordinator(const CattaneoParams& p, double t);

/// Candidate closed form alpha lambda^{alpha-2} [1 - alpha + alpha lambda^alpha] U(t),
/// with alpha (1 - alpha) U(t) at lambda = 0. It equates E[B(T)^2] with E[T^2],
/// so validation only reports it next to Monte Carlo.
double variance_formula(const CattaneoParams& p, double t);

/// Var W(t) = E[2 T(L(t))] = 2 alpha lambda^{alpha-1} U(t); infinite at lambda = 0.
double variance_time_changed(const CattaneoParams& p, double t);

/// psi(s) = (s + lambda)^alpha - lambda^alpha.
Complex tempered_exponent(const CattaneoParams& p, Complex s);

/// Solution of u'' + 2k u' = psi(s) u with u(0) = 1, u'(0) = 0:
/// e^{-kt} [cosh(Rt) + (k/R) sinh(Rt)],  R = sqrt(k^2 + psi(s)).
/// Small |Rt| uses the series of sinh(Rt)/R, so R = 0 is covered.
Complex beta1_space_laplace(const CattaneoParams& p, Complex s, double t);

/// Variant with R = sqrt(k^2 - psi(s)); it solves u'' + 2k u' = -psi u instead.
/// Kept as a sign-convention probe for the validation report.
Complex beta1_space_laplace_printed(const CattaneoParams& p, Complex s, double t);

}  // namespace analytic
}  // namespace cattaneo
