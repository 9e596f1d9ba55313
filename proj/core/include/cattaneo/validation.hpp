#pragma once

#include "cattaneo/analytic.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cattaneo::validation {

enum class Verdict { pass, fail, reported };

/// Why an asserted check failed.
enum class FailureKind {
    none,
    tolerance,  ///< the comparison itself missed
    engine      ///< an oracle or estimator threw (non-convergence, budget exhausted)
};

/// One comparison of an estimate against an oracle.
struct ValidationReport {
    int criterion = 0;
    std::string quantity;
    Complex estimate;
    double std_error = 0.0;  ///< 0 for deterministic estimates
    Complex oracle;
    /// |estimate - oracle| / std_error, NaN when std_error is 0.
    double z_score = 0.0;
    /// Pass rule in words, e.g. "|d| <= 1e-12" or "p > 0.01".
    std::string rule;
    Verdict verdict = Verdict::reported;
    FailureKind failure = FailureKind::none;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<ValidationReport> reports;
    double seconds = 0.0;
    /// True when no asserted report failed.
    bool passed() const;
};

struct ValidationConfig {
    /// Model for the Monte Carlo criteria (3-6, 8, 14).
    CattaneoParams params{0.7, 0.4, 1.0, 0.5};
    std::size_t n_samples = 100000;
    std::uint64_t seed = 20240917;
    unsigned threads = 0;
    /// Overrides for named tolerances: "cf_floor" (0.02), "z_max" (4),
    /// "mean_rel" (0.03), "variance_rel" (0.05), "p_min" (0.01).
    std::map<std::string, double> tolerance_overrides;
};

/// Multiplier sqrt(1e5 / n) >= 1 applied to fixed Monte Carlo tolerances
/// below the acceptance sample size.
double tolerance_widening(std::size_t n_samples);

inline constexpr int kCriterionCount = 14;

std::string criterion_title(int id);

/// Runs the listed criteria (all when empty), sharing ensembles between them.
/// Throws DomainError for an unknown id or n_samples < 100.
std::vector<CriterionResult> run_validation(const ValidationConfig& cfg, const std::vector<int>& ids = {});

std::string to_string(Verdict v);
std::string to_string(FailureKind k);

}  // namespace cattaneo::validation
