#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gumbel2/bayes.hpp"
#include "gumbel2/censoring.hpp"
#include "gumbel2/newton.hpp"

namespace gumbel2 {

enum class IntervalMethod { ACI, BootP, BootT, HPD };

std::string to_string(IntervalMethod method);

struct IntervalEstimate {
    double lower = 0.0;
    double upper = 0.0;
    double level = 0.95;  ///< nominal coverage 1 - gamma
    IntervalMethod method = IntervalMethod::ACI;
    bool clamped = false;  ///< lower end raised to 0 for a positive parameter

    double length() const { return upper - lower; }
    bool contains(double v) const { return lower <= v && v <= upper; }
};

struct IntervalPair {
    IntervalEstimate alpha;
    IntervalEstimate beta;
};

/// estimate -/+ z_{gamma/2} * se, lower end clamped at 0.
IntervalEstimate normal_interval(double estimate, double se, double gamma, IntervalMethod method);

/// Asymptotic intervals from the inverse observed information.
IntervalPair aci(const FitReport& fit, double gamma);

/// 1-based ranks ceil(B gamma/2) and ceil(B (1 - gamma/2)), clipped to [1, B].
std::pair<std::size_t, std::size_t> percentile_ranks(std::size_t count, double gamma);

/// Percentile interval of bootstrap estimates.
IntervalEstimate percentile_interval(std::vector<double> estimates, double gamma);

/// Studentized interval [est - t_hi * se, est - t_lo * se] from bootstrap
/// t-statistics. With `raw`, the t-quantiles themselves are returned.
IntervalEstimate studentized_interval(double estimate, double se, std::vector<double> t_stats, double gamma,
                                      bool raw = false);

struct BootstrapReplicates {
    std::vector<Params> estimates;
    std::vector<std::array<double, 2>> std_errors;
    int failures = 0;
};

/// Parametric bootstrap: B samples regenerated at the fitted parameters
/// with the original (n, m, T, R), each refitted by maximum likelihood.
/// Refits without a usable observed information count as failures; more
/// than 10% failures raises std::runtime_error.
BootstrapReplicates parametric_bootstrap(const AdaptiveCensoredSample& s, const FitReport& fit, int B,
                                         std::uint64_t seed, unsigned threads = 1);

IntervalPair boot_p(const AdaptiveCensoredSample& s, const FitReport& fit, int B, double gamma,
                    std::uint64_t seed);
IntervalPair boot_t(const AdaptiveCensoredSample& s, const FitReport& fit, int B, double gamma,
                    std::uint64_t seed, bool raw = false);

IntervalPair boot_p_from(const BootstrapReplicates& reps, double gamma);
IntervalPair boot_t_from(const BootstrapReplicates& reps, const FitReport& fit, double gamma, bool raw = false);

/// Shortest window holding floor((1-gamma) M) + 1 sorted draws, smallest
/// starting index on ties. Requires M >= 100 draws.
IntervalEstimate hpd_interval(std::vector<double> draws, double gamma);
IntervalPair hpd(const PosteriorChain& chain, double gamma, int burn_in);

}  // namespace gumbel2
