#pragma once

#include "cattaneo/rng.hpp"

namespace cattaneo {

/// One-sided alpha-stable law at time t: Laplace transform e^{-t s^alpha}.
struct StableParams {
    double alpha = 0.5;  ///< in (0,1)
    double t = 1.0;      ///< > 0
};

/// Exponentially tempered stable law, density e^{-lambda x + lambda^alpha t} h_alpha(x,t)
/// and Laplace exponent t[(s+lambda)^alpha - lambda^alpha].
struct TemperedParams {
    double alpha = 0.5;
    double lambda = 0.0;  ///< >= 0; 0 gives the untempered law
    double t = 1.0;
};

/// Kanter's exact representation:
/// X = t^{1/alpha} sin(alpha U) / sin(U)^{1/alpha} * (sin((1-alpha)U) / E)^{(1-alpha)/alpha}
/// with U ~ Unif(0, pi) and E ~ Exp(1).
double sample_stable(const StableParams& p, Generator& gen);
double sample_stable(const StableParams& p, const RngStream& rng);

/// Splits [0,t] into m = ceil(lambda^alpha t) pieces, draws each stable
/// increment by rejection with acceptance e^{-lambda X}, and sums them. Each
/// piece accepts with probability e^{-lambda^alpha t/m} >= e^{-1}. Throws
/// SamplingError if one piece exhausts its retry budget. lambda = 0 reduces
/// to sample_stable on the same generator.
double sample_tempered(const TemperedParams& p, Generator& gen);
double sample_tempered(const TemperedParams& p, const RngStream& rng);

/// h_alpha(x,t) by Talbot inversion of e^{-t s^alpha}. Deep in the left tail
/// with alpha near 1 the transform acts like a delay and the inversion fails
/// its own convergence check; those points fall back to the Zolotarev
/// integral. Throws DomainError for x <= 0.
double stable_density(const StableParams& p, double x);

/// e^{-lambda x + lambda^alpha t} stable_density(x).
double tempered_density(const TemperedParams& p, double x);

/// Distribution function of the tempered law by inversion of
/// e^{-t[(s+lambda)^alpha - lambda^alpha]} / s.
double tempered_cdf(const TemperedParams& p, double x);

namespace detail {

/// h_alpha(x,t) from Zolotarev's integral over (0, pi) with a positive
/// integrand; independent of the Laplace inversion route.
double stable_density_zolotarev(const StableParams& p, double x);

}  // namespace detail
}  // namespace cattaneo
