#pragma once

#include "cattaneo/analytic.hpp"
#include "cattaneo/rng.hpp"
#include "cattaneo/stats.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace cattaneo::sim {

/// Throws DomainError unless alpha in (0,1), beta in (0,1/2), lambda >= 0, k > 0.
void validate_simulation(const CattaneoParams& p);

/// Draws L(t) = inf{s : A(s) >= t} for A(s) = H1(s) + c H2(s), c = (2k)^{1/beta},
/// H1 a (2 beta)-stable and H2 a beta-stable subordinator.
///
/// For fixed unit-time draws S1, S2 the curve s^{1/(2 beta)} S1 + c s^{1/beta} S2
/// has the law of A(s) at every s and increases in s, so its crossing level has
/// exactly the law of L(t). With u = s^{1/(2 beta)} the crossing solves
/// c S2 u^2 + S1 u = t, giving s = (2t / (S1 + sqrt(S1^2 + 4 c S2 t)))^{2 beta}.
/// Only the marginal at one t is exact; for a fixed stream the result is
/// nondecreasing in t.
double sample_inverse_subordinator(const CattaneoParams& p, double t, Generator& gen);
double sample_inverse_subordinator(const CattaneoParams& p, double t, const RngStream& rng);

/// A(s) for one s, from an independent draw.
double sample_summed_subordinator(const CattaneoParams& p, double s, Generator& gen);

/// Path-based reference: A is accumulated from independent increments on the
/// grid ds, 2ds, ... and the first grid point with A >= t is returned, so the
/// result overshoots the true passage level by less than ds.
double first_passage_on_grid(const CattaneoParams& p, double t, double ds, const RngStream& rng);

/// W(t) = B(T(L(t))) with Var B(s) = 2s: L from stage 0 of the stream, the
/// tempered time T from stage 1 (T = 0 when L = 0), the Gaussian from stage 2.
double sample_W(const CattaneoParams& p, double t, const RngStream& rng);

/// X(s) = B(T(s)) at a fixed operational time s, streams as in sample_W.
double sample_X(const CattaneoParams& p, double s, const RngStream& rng);

struct TrajectoryEnsemble {
    double t = 0.0;
    std::vector<double> samples;
    RngStream seed;
    std::size_t n = 0;
    stats::Moments moments;
};

enum class Observable { W, inverse_subordinator, X };

/// n draws where trajectory i uses stream (seed.master_seed, seed.stream_id + i).
/// Work is split over `threads` workers (0 = hardware concurrency); samples
/// and moments are identical for every thread count.
TrajectoryEnsemble run_ensemble(const CattaneoParams& p, double t, std::size_t n, const RngStream& seed,
                                unsigned threads = 0, Observable what = Observable::W);

/// ((1/n) sum e^{i xi x_j}, standard error of the real part).
std::pair<Complex, double> empirical_cf(const TrajectoryEnsemble& e, double xi);

}  // namespace cattaneo::sim
