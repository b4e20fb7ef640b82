#include "gumbel2/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gumbel2/mle.hpp"

namespace gumbel2 {

void GammaPriorPair::validate() const {
    for (double v : {a, b, c, d}) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("gamma hyper-parameters must be finite and nonnegative");
        }
    }
}

double GammaPriorPair::log_density(const Params& p) const {
    return (a - 1.0) * std::log(p.alpha) - b * p.alpha + (c - 1.0) * std::log(p.beta) - d * p.beta;
}

LossFunction LossFunction::linex(double p) {
    if (p == 0.0 || !std::isfinite(p)) throw std::invalid_argument("LINEX shape p must be nonzero");
    return {Kind::LINEX, p};
}

LossFunction LossFunction::gelf(double q) {
    if (q == 0.0 || !std::isfinite(q)) throw std::invalid_argument("GELF shape q must be nonzero");
    return {Kind::GELF, q};
}

std::string LossFunction::name() const {
    switch (kind) {
        case Kind::SELF: return "SELF";
        case Kind::LINEX: return "LINEX(p=" + format_number(shape) + ")";
        case Kind::GELF: return "GELF(q=" + format_number(shape) + ")";
    }
    return "?";
}

void McmcConfig::validate() const {
    if (chain_length < 1) throw std::invalid_argument("chain length must be positive");
    if (burn_in < 0 || burn_in >= chain_length) throw std::invalid_argument("burn-in must satisfy 0 <= B < N");
    if (!(proposal_sd_alpha > 0.0) || !(proposal_sd_beta > 0.0) || !std::isfinite(proposal_sd_alpha) ||
        !std::isfinite(proposal_sd_beta)) {
        throw std::invalid_argument("proposal standard deviations must be positive");
    }
}

double log_posterior(const Params& p, const AdaptiveCensoredSample& s, const GammaPriorPair& prior) {
    p.validate();
    prior.validate();
    return LogLikelihood(s).value(p) + prior.log_density(p);
}

Evaluation log_posterior_evaluation(const Params& p, const AdaptiveCensoredSample& s,
                                    const GammaPriorPair& prior, int order) {
    p.validate();
    prior.validate();
    Evaluation ev = LogLikelihood(s).evaluate(p, order);
    ev.value += prior.log_density(p);
    if (order > 0) {
        ev.gradient[0] += (prior.a - 1.0) / p.alpha - prior.b;
        ev.gradient[1] += (prior.c - 1.0) / p.beta - prior.d;
    }
    if (order > 1) {
        ev.hessian.a11 -= (prior.a - 1.0) / (p.alpha * p.alpha);
        ev.hessian.a22 -= (prior.c - 1.0) / (p.beta * p.beta);
    }
    return ev;
}

PosteriorChain run_metropolis(const LogTarget& target, const McmcConfig& cfg, const Params& init) {
    cfg.validate();
    init.validate();
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> step_alpha(0.0, cfg.proposal_sd_alpha);
    std::normal_distribution<double> step_beta(0.0, cfg.proposal_sd_beta);

    PosteriorChain chain;
    chain.alphas.reserve(static_cast<std::size_t>(cfg.chain_length));
    chain.betas.reserve(static_cast<std::size_t>(cfg.chain_length));
    Params current = init;
    double current_lp = target(current);
    if (!std::isfinite(current_lp)) throw std::invalid_argument("initial state has zero posterior density");

    for (int i = 0; i < cfg.chain_length; ++i) {
        const Params proposal{current.alpha + step_alpha(rng), current.beta + step_beta(rng)};
        const double u = open_uniform(rng);
        if (proposal.alpha > 0.0 && proposal.beta > 0.0) {
            const double lp = target(proposal);
            if (std::isfinite(lp) && std::log(u) <= lp - current_lp) {
                current = proposal;
                current_lp = lp;
                ++chain.accepted;
            }
        }
        chain.alphas.push_back(current.alpha);
        chain.betas.push_back(current.beta);
    }
    return chain;
}

PosteriorChain run_mh(const AdaptiveCensoredSample& s, const GammaPriorPair& prior, const McmcConfig& cfg,
                      const Params& init) {
    prior.validate();
    const LogLikelihood ll(s);
    return run_metropolis([&](const Params& p) { return ll.value(p) + prior.log_density(p); }, cfg, init);
}

namespace {

// ln mean(exp(v_i)) shifted by the maximum so large |v| cannot overflow.
double log_mean_exp(std::span<const double> v) {
    const double top = *std::max_element(v.begin(), v.end());
    double acc = 0.0;
    for (double x : v) acc += std::expm1(x - top);
    return top + std::log1p(acc / static_cast<double>(v.size()));
}

}  // namespace

double bayes_estimate(std::span<const double> draws, const LossFunction& loss) {
    if (draws.empty()) throw std::invalid_argument("no draws to summarize");
    switch (loss.kind) {
        case LossFunction::Kind::SELF: {
            double sum = 0.0;
            for (double x : draws) sum += x;
            return sum / static_cast<double>(draws.size());
        }
        case LossFunction::Kind::LINEX: {
            std::vector<double> v(draws.size());
            std::transform(draws.begin(), draws.end(), v.begin(), [&](double x) { return -loss.shape * x; });
            return -log_mean_exp(v) / loss.shape;
        }
        case LossFunction::Kind::GELF: {
            std::vector<double> v(draws.size());
            std::transform(draws.begin(), draws.end(), v.begin(),
                           [&](double x) { return -loss.shape * std::log(x); });
            return std::exp(-log_mean_exp(v) / loss.shape);
        }
    }
    return 0.0;
}

Params bayes_estimate(const PosteriorChain& chain, const LossFunction& loss, int burn_in) {
    if (burn_in < 0 || static_cast<std::size_t>(burn_in) >= chain.size()) {
        throw std::invalid_argument("burn-in must be smaller than the chain length");
    }
    const auto skip = static_cast<std::size_t>(burn_in);
    return {bayes_estimate(std::span(chain.alphas).subspan(skip), loss),
            bayes_estimate(std::span(chain.betas).subspan(skip), loss)};
}

std::pair<double, double> proposal_from_mle(const FitReport& fit) {
    const Matrix2 cov = fit.observed_info.inverse();
    if (!(cov.a11 > 0.0) || !(cov.a22 > 0.0) || !std::isfinite(cov.a11) || !std::isfinite(cov.a22)) {
        throw std::domain_error("observed information does not yield positive variances");
    }
    return {std::sqrt(cov.a11), std::sqrt(cov.a22)};
}

GammaPriorPair moment_matched_prior(const FitReport& fit) {
    const auto [sa, sb] = proposal_from_mle(fit);
    const double ma = fit.estimate.alpha, mb = fit.estimate.beta;
    return {ma * ma / (sa * sa), ma / (sa * sa), mb * mb / (sb * sb), mb / (sb * sb)};
}

}  // namespace gumbel2
