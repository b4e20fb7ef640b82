#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "gumbel2/censoring.hpp"
#include "gumbel2/newton.hpp"

namespace gumbel2 {

/// Independent gamma priors: alpha ~ Gamma(a, rate b), beta ~ Gamma(c, rate d),
///   ln pi(alpha, beta) = (a-1) ln alpha - b alpha + (c-1) ln beta - d beta.
struct GammaPriorPair {
    double a = 3.0, b = 2.0, c = 3.0, d = 4.0;

    void validate() const;
    double log_density(const Params& p) const;
};

struct LossFunction {
    enum class Kind { SELF, LINEX, GELF };
    Kind kind = Kind::SELF;
    double shape = 0.0;  ///< p for LINEX, q for GELF

    static LossFunction self() { return {}; }
    static LossFunction linex(double p);  // p != 0
    static LossFunction gelf(double q);   // q != 0
    std::string name() const;
};

struct McmcConfig {
    int chain_length = 5000;
    int burn_in = 1000;
    double proposal_sd_alpha = 0.1;
    double proposal_sd_beta = 0.1;
    std::uint64_t seed = 1;

    void validate() const;
};

struct PosteriorChain {
    std::vector<double> alphas;
    std::vector<double> betas;
    int accepted = 0;

    std::size_t size() const { return alphas.size(); }
    double acceptance_rate() const { return size() == 0 ? 0.0 : static_cast<double>(accepted) / size(); }
};

/// Unnormalized log posterior: log-likelihood plus log prior.
double log_posterior(const Params& p, const AdaptiveCensoredSample& s, const GammaPriorPair& prior);
Evaluation log_posterior_evaluation(const Params& p, const AdaptiveCensoredSample& s,
                                    const GammaPriorPair& prior, int order);

using LogTarget = std::function<double(const Params&)>;

/// Random-walk Metropolis-Hastings with independent normal increments for
/// alpha and beta. Proposals leaving the positive quadrant are rejected.
/// The chain holds the N states after each transition, burn-in included.
PosteriorChain run_metropolis(const LogTarget& target, const McmcConfig& cfg, const Params& init);

PosteriorChain run_mh(const AdaptiveCensoredSample& s, const GammaPriorPair& prior, const McmcConfig& cfg,
                      const Params& init);

/// Bayes point estimate of one parameter from draws under the given loss:
///   SELF  -> mean
///   LINEX -> -(1/p) ln mean(exp(-p theta))
///   GELF  -> (mean theta^-q)^(-1/q)
double bayes_estimate(std::span<const double> draws, const LossFunction& loss);

Params bayes_estimate(const PosteriorChain& chain, const LossFunction& loss, int burn_in);

/// Proposal standard deviations from the inverse observed information.
std::pair<double, double> proposal_from_mle(const FitReport& fit);

/// Gamma priors whose means and variances match a previous fit's estimate
/// and inverse observed information (shape = mean^2/var, rate = mean/var).
GammaPriorPair moment_matched_prior(const FitReport& fit);

}  // namespace gumbel2
