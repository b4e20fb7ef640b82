#include "gumbel2/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gumbel2/mle.hpp"
#include "gumbel2/numeric.hpp"

namespace gumbel2 {

namespace {

void require_gamma(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in (0,1)");
}

// Guards floor/ceil against products such as 0.95 * 100 = 94.999...
constexpr double kIndexSlack = 1e-9;

IntervalEstimate finish(double lower, double upper, double gamma, IntervalMethod method) {
    IntervalEstimate out;
    out.level = 1.0 - gamma;
    out.method = method;
    if (lower > upper) std::swap(lower, upper);
    if (lower < 0.0) {
        lower = 0.0;
        out.clamped = true;
        upper = std::max(upper, 0.0);
    }
    out.lower = lower;
    out.upper = upper;
    return out;
}

std::array<double, 2> standard_errors(const Matrix2& info) {
    const Matrix2 cov = info.inverse();
    if (!(cov.a11 >= 0.0) || !(cov.a22 >= 0.0)) {
        throw std::domain_error("inverse observed information has a negative variance");
    }
    return {std::sqrt(cov.a11), std::sqrt(cov.a22)};
}

}  // namespace

std::string to_string(IntervalMethod method) {
    switch (method) {
        case IntervalMethod::ACI: return "ACI";
        case IntervalMethod::BootP: return "boot-p";
        case IntervalMethod::BootT: return "boot-t";
        case IntervalMethod::HPD: return "HPD";
    }
    return "?";
}

IntervalEstimate normal_interval(double estimate, double se, double gamma, IntervalMethod method) {
    require_gamma(gamma);
    if (!(se >= 0.0)) throw std::invalid_argument("standard error must be nonnegative");
    const double z = normal_upper_quantile(gamma / 2.0);
    return finish(estimate - z * se, estimate + z * se, gamma, method);
}

IntervalPair aci(const FitReport& fit, double gamma) {
    const auto se = standard_errors(fit.observed_info);
    return {normal_interval(fit.estimate.alpha, se[0], gamma, IntervalMethod::ACI),
            normal_interval(fit.estimate.beta, se[1], gamma, IntervalMethod::ACI)};
}

std::pair<std::size_t, std::size_t> percentile_ranks(std::size_t count, double gamma) {
    require_gamma(gamma);
    if (count == 0) throw std::invalid_argument("no bootstrap replicates");
    const double n = static_cast<double>(count);
    auto rank = [&](double x) {
        const auto r = static_cast<std::size_t>(std::ceil(x - kIndexSlack));
        return std::clamp<std::size_t>(r, 1, count);
    };
    return {rank(n * gamma / 2.0), rank(n * (1.0 - gamma / 2.0))};
}

IntervalEstimate percentile_interval(std::vector<double> estimates, double gamma) {
    const auto [lo, hi] = percentile_ranks(estimates.size(), gamma);
    std::sort(estimates.begin(), estimates.end());
    return finish(estimates[lo - 1], estimates[hi - 1], gamma, IntervalMethod::BootP);
}

IntervalEstimate studentized_interval(double estimate, double se, std::vector<double> t_stats, double gamma,
                                      bool raw) {
    const auto [lo, hi] = percentile_ranks(t_stats.size(), gamma);
    std::sort(t_stats.begin(), t_stats.end());
    const double t_lo = t_stats[lo - 1], t_hi = t_stats[hi - 1];
    if (raw) return finish(t_lo, t_hi, gamma, IntervalMethod::BootT);
    return finish(estimate - t_hi * se, estimate - t_lo * se, gamma, IntervalMethod::BootT);
}

BootstrapReplicates parametric_bootstrap(const AdaptiveCensoredSample& s, const FitReport& fit, int B,
                                         std::uint64_t seed, unsigned threads) {
    if (B < 100) throw std::invalid_argument("bootstrap needs B >= 100");
    fit.estimate.validate();
    struct Slot {
        Params estimate;
        std::array<double, 2> se{};
        bool ok = false;
    };
    std::vector<Slot> slots(static_cast<std::size_t>(B));
    parallel_for(slots.size(), threads, [&](std::size_t b) {
        const auto resample = generate_sample(fit.estimate, s.plan, derive_seed(seed, 0, b));
        const auto refit = fit_mle(resample, fit.estimate);
        if (!refit.converged) return;
        try {
            slots[b].se = standard_errors(refit.observed_info);
        } catch (const std::domain_error&) {
            return;
        }
        if (!(slots[b].se[0] > 0.0) || !(slots[b].se[1] > 0.0)) return;
        slots[b].estimate = refit.estimate;
        slots[b].ok = true;
    });
    BootstrapReplicates reps;
    for (const auto& slot : slots) {
        if (!slot.ok) {
            ++reps.failures;
            continue;
        }
        reps.estimates.push_back(slot.estimate);
        reps.std_errors.push_back(slot.se);
    }
    if (reps.failures * 10 > B) {
        throw std::runtime_error("more than 10% of bootstrap refits failed (" + std::to_string(reps.failures) +
                                 " of " + std::to_string(B) + ")");
    }
    return reps;
}

IntervalPair boot_p_from(const BootstrapReplicates& reps, double gamma) {
    std::vector<double> a, b;
    for (const auto& e : reps.estimates) {
        a.push_back(e.alpha);
        b.push_back(e.beta);
    }
    return {percentile_interval(std::move(a), gamma), percentile_interval(std::move(b), gamma)};
}

IntervalPair boot_t_from(const BootstrapReplicates& reps, const FitReport& fit, double gamma, bool raw) {
    const auto se = standard_errors(fit.observed_info);
    std::vector<double> ta, tb;
    for (std::size_t i = 0; i < reps.estimates.size(); ++i) {
        ta.push_back((reps.estimates[i].alpha - fit.estimate.alpha) / reps.std_errors[i][0]);
        tb.push_back((reps.estimates[i].beta - fit.estimate.beta) / reps.std_errors[i][1]);
    }
    return {studentized_interval(fit.estimate.alpha, se[0], std::move(ta), gamma, raw),
            studentized_interval(fit.estimate.beta, se[1], std::move(tb), gamma, raw)};
}

IntervalPair boot_p(const AdaptiveCensoredSample& s, const FitReport& fit, int B, double gamma,
                    std::uint64_t seed) {
    require_gamma(gamma);
    return boot_p_from(parametric_bootstrap(s, fit, B, seed), gamma);
}

IntervalPair boot_t(const AdaptiveCensoredSample& s, const FitReport& fit, int B, double gamma,
                    std::uint64_t seed, bool raw) {
    require_gamma(gamma);
    return boot_t_from(parametric_bootstrap(s, fit, B, seed), fit, gamma, raw);
}

IntervalEstimate hpd_interval(std::vector<double> draws, double gamma) {
    require_gamma(gamma);
    if (draws.size() < 100) throw std::invalid_argument("HPD interval needs at least 100 draws");
    std::sort(draws.begin(), draws.end());
    const std::size_t count = draws.size();
    const auto span = static_cast<std::size_t>(std::floor((1.0 - gamma) * static_cast<double>(count) + kIndexSlack));
    std::size_t best = 0;
    double best_width = draws[span] - draws[0];
    for (std::size_t k = 1; k + span < count; ++k) {
        const double width = draws[k + span] - draws[k];
        if (width < best_width) {
            best_width = width;
            best = k;
        }
    }
    return finish(draws[best], draws[best + span], gamma, IntervalMethod::HPD);
}

IntervalPair hpd(const PosteriorChain& chain, double gamma, int burn_in) {
    if (burn_in < 0 || static_cast<std::size_t>(burn_in) >= chain.size()) {
        throw std::invalid_argument("burn-in must be smaller than the chain length");
    }
    const auto skip = static_cast<std::ptrdiff_t>(burn_in);
    return {hpd_interval({chain.alphas.begin() + skip, chain.alphas.end()}, gamma),
            hpd_interval({chain.betas.begin() + skip, chain.betas.end()}, gamma)};
}

}  // namespace gumbel2
