#include "cattaneo/special_fn.hpp"

#include "cattaneo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace cattaneo::special_fn {

namespace {

constexpr double kPi = std::numbers::pi;

// Target quadrature error e^{-kLogTol}; about 1e-15.
constexpr double kLogTol = 34.5;

void validate(const MLParams& p) {
    cattaneo::detail::require(p.beta > 0.0 && std::isfinite(p.beta), "mittag_leffler: beta must be > 0");
    cattaneo::detail::require(std::isfinite(p.gamma), "mittag_leffler: gamma must be finite");
}

struct Pole {
    Complex s;
    double parabola;  // mu of the parabola mu(1+iu)^2 passing through s
};

struct ContourPlan {
    double mu = 0.0;
    double h = 0.0;
    int n = std::numeric_limits<int>::max();
};

// Number of trapezoidal nodes per side needed on the parabola mu(1+iu)^2 when
// the nearest enclosed singularity sits on parabola lo and the nearest
// excluded one on parabola hi. Discretisation error toward each side and the
// truncation error are each driven below e^{-kLogTol}.
ContourPlan plan_for(double mu, double lo, double hi) {
    ContourPlan plan;
    plan.mu = mu;
    const double v_plus = lo > 0.0 ? 1.0 - std::sqrt(lo / mu) : 1.0;
    const double v = 0.9 * v_plus;
    if (v <= 0.0) return plan;
    const double h_plus = 2.0 * kPi * v / (kLogTol + mu * (1.0 - v) * (1.0 - v));

    double h_minus = kPi / (mu + std::sqrt(mu * mu + mu * kLogTol));
    if (std::isfinite(hi)) {
        const double w_max = 0.9 * (std::sqrt(hi / mu) - 1.0);
        if (w_max <= 0.0) return plan;
        const double w_free = kPi / (mu * h_minus) - 1.0;
        if (w_free > w_max) {
            h_minus = 2.0 * kPi * w_max / (kLogTol + mu * (1.0 + w_max) * (1.0 + w_max));
        }
    }
    plan.h = std::min(h_plus, h_minus);
    const double extent = std::sqrt(1.0 + kLogTol / mu);
    const double nodes = std::ceil(extent / plan.h);
    if (nodes < 1.0e5) plan.n = static_cast<int>(nodes);
    return plan;
}

// Summands near u = 0 have size e^mu, so roundoff grows like e^mu * eps.
// Within the node budget the smallest admissible mu wins; past it, the
// cheapest plan does.
constexpr int kNodeBudget = 160;

bool better(const ContourPlan& a, const ContourPlan& b) {
    const bool a_ok = a.n <= kNodeBudget;
    const bool b_ok = b.n <= kNodeBudget;
    if (a_ok != b_ok) return a_ok;
    if (a_ok) return a.mu < b.mu;
    return a.n < b.n || (a.n == b.n && a.mu < b.mu);
}

ContourPlan best_plan_in_region(double lo, double hi) {
    const double a = std::max(lo * (1.0 + 1e-3), 1e-3);
    const double b = std::isfinite(hi) ? hi * (1.0 - 1e-3) : std::max({4.0 * a, 100.0, 2.0 * lo});
    ContourPlan best;
    if (!(b > a)) return best;
    constexpr int kCandidates = 64;
    const double ratio = std::log(b / a);
    for (int i = 0; i <= kCandidates; ++i) {
        const double mu = a * std::exp(ratio * i / kCandidates);
        ContourPlan c = plan_for(mu, lo, hi);
        if (c.n != std::numeric_limits<int>::max() && better(c, best)) best = c;
    }
    return best;
}

}  // namespace

double rgamma(double x) {
    if (x <= 0.0 && x == std::nearbyint(x)) return 0.0;
    if (x > 170.0) return std::exp(-std::lgamma(x));
    return 1.0 / std::tgamma(x);
}

namespace detail {

Complex ml_series(MLParams p, Complex z) {
    Complex sum{0.0, 0.0};
    Complex power{1.0, 0.0};
    constexpr int kMaxTerms = 5000;
    for (int k = 0; k < kMaxTerms; ++k) {
        const double rg = rgamma(p.beta * k + p.gamma);
        const Complex term = power * rg;
        sum += term;
        if (k > 2 && std::abs(term) <= 1e-17 * std::abs(sum) && p.beta * k + p.gamma > 1.0) {
            return sum;
        }
        if (std::abs(sum) == 0.0 && std::abs(power) == 0.0) return sum;
        power *= z;
    }
    throw ConvergenceError("mittag_leffler: power series did not converge");
}

Complex ml_contour(MLParams p, Complex z) {
    const double beta = p.beta;
    const double gamma = p.gamma;
    const double rho = std::pow(std::abs(z), 1.0 / beta);
    const double arg_z = std::arg(z);

    // Poles s^beta = z on the principal sheet |arg s| < pi.
    std::vector<Pole> poles;
    const int j_lo = static_cast<int>(std::ceil((-beta * kPi - arg_z) / (2.0 * kPi)));
    const int j_hi = static_cast<int>(std::floor((beta * kPi - arg_z) / (2.0 * kPi)));
    for (int j = j_lo; j <= j_hi; ++j) {
        const double phase = (arg_z + 2.0 * kPi * j) / beta;
        if (std::abs(phase) >= kPi) continue;
        const Complex s = std::polar(rho, phase);
        const double c = std::cos(0.5 * phase);
        poles.push_back({s, rho * c * c});
    }

    // Singular parabolas in increasing order; the branch point sits on mu = 0.
    std::vector<double> levels{0.0};
    for (const auto& pole : poles) levels.push_back(pole.parabola);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    ContourPlan plan;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const double lo = levels[i];
        const double hi = i + 1 < levels.size() ? levels[i + 1] : std::numeric_limits<double>::infinity();
        ContourPlan c = best_plan_in_region(lo, hi);
        if (c.n != std::numeric_limits<int>::max() && better(c, plan)) plan = c;
    }
    if (plan.n == std::numeric_limits<int>::max()) {
        throw ConvergenceError("mittag_leffler: no admissible integration contour");
    }

    Complex residues{0.0, 0.0};
    for (const auto& pole : poles) {
        if (pole.parabola > plan.mu) {
            residues += std::exp(pole.s + (1.0 - gamma) * std::log(pole.s)) / beta;
        }
    }

    // (h / 2 pi i) sum e^s s^{beta-gamma} / (s^beta - z) s'(u),  s(u) = mu (1 + iu)^2
    const Complex i1{0.0, 1.0};
    Complex integral{0.0, 0.0};
    for (int k = -plan.n; k <= plan.n; ++k) {
        const double u = k * plan.h;
        const Complex w = 1.0 + i1 * u;
        const Complex s = plan.mu * w * w;
        const Complex ds = 2.0 * i1 * plan.mu * w;
        const Complex log_s = std::log(s);
        const Complex num = std::exp(s + (beta - gamma) * log_s);
        const Complex den = std::exp(beta * log_s) - z;
        integral += num / den * ds;
    }
    integral *= plan.h / (2.0 * kPi * i1);
    return residues + integral;
}

}  // namespace detail

Complex mittag_leffler(MLParams p, Complex z) {
    validate(p);
    cattaneo::detail::require(std::isfinite(z.real()) && std::isfinite(z.imag()), "mittag_leffler: z must be finite");
    if (z == Complex{0.0, 0.0}) return {rgamma(p.gamma), 0.0};
    if (z.imag() < 0.0) return std::conj(mittag_leffler(p, std::conj(z)));
    // The contour sum has an absolute error floor, too coarse for exp(z) deep in the left half-plane.
    if (p.beta == 1.0 && p.gamma == 1.0) return std::exp(z);

    Complex value = std::abs(z) <= detail::kSeriesRadius ? detail::ml_series(p, z) : detail::ml_contour(p, z);
    if (z.imag() == 0.0) value.imag(0.0);
    return value;
}

double mittag_leffler_real(MLParams p, double x) {
    return mittag_leffler(p, Complex{x, 0.0}).real();
}

}  // namespace cattaneo::special_fn
