#include "gumbel2/sim.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "gumbel2/mle.hpp"
#include "gumbel2/mps.hpp"
#include "gumbel2/numeric.hpp"

namespace gumbel2 {

CensoringPlan PlanSpec::plan() const {
    CensoringPlan p;
    p.n = n;
    p.m = m;
    p.threshold = threshold;
    p.removals = scheme == 0 ? removals : removal_scheme(scheme, n, m);
    p.validate();
    return p;
}

std::string PlanSpec::scheme_label() const {
    switch (scheme) {
        case 1: return "I";
        case 2: return "II";
        case 3: return "III";
        default: return format_removals(removals);
    }
}

void SimulationConfig::validate() const {
    truth.validate();
    if (plans.empty()) throw std::invalid_argument("simulation needs at least one plan");
    for (const auto& p : plans) (void)p.plan();
    if (replications < 1) throw std::invalid_argument("replications must be positive");
    for (double p : linex_p) (void)LossFunction::linex(p);
    for (double q : gelf_q) (void)LossFunction::gelf(q);
    if ((boot_p || boot_t) && bootstrap_size < 100) throw std::invalid_argument("bootstrap needs B >= 100");
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in (0,1)");
    if (needs_chain()) {
        prior.validate();
        McmcConfig mc;
        mc.chain_length = chain_length;
        mc.burn_in = burn_in;
        mc.validate();
        if (hpd && chain_length - burn_in < 100) throw std::invalid_argument("HPD needs at least 100 retained draws");
    }
}

namespace {

std::vector<LossFunction> bayes_losses(const SimulationConfig& cfg) {
    std::vector<LossFunction> out;
    if (cfg.self) out.push_back(LossFunction::self());
    for (double p : cfg.linex_p) out.push_back(LossFunction::linex(p));
    for (double q : cfg.gelf_q) out.push_back(LossFunction::gelf(q));
    return out;
}

struct Replicate {
    std::vector<std::optional<Params>> estimates;       // indexed like estimator_names
    std::vector<std::optional<IntervalPair>> intervals;  // indexed like interval_names
};

Replicate run_replicate(const SimulationConfig& cfg, const CensoringPlan& plan, std::uint64_t seed) {
    const auto losses = bayes_losses(cfg);
    Replicate out;
    const auto sample = generate_sample(cfg.truth, plan, derive_seed(seed, 0));

    std::optional<FitReport> mle_fit, mps_fit;
    try {
        auto f = fit_mle(sample);
        if (f.converged) mle_fit = f;
    } catch (const std::exception&) {
    }
    if (cfg.mps || (!mle_fit && cfg.needs_chain())) {
        try {
            auto f = fit_mps(sample);
            if (f.converged) mps_fit = f;
        } catch (const std::exception&) {
        }
    }
    if (cfg.mle) out.estimates.emplace_back(mle_fit ? std::optional(mle_fit->estimate) : std::nullopt);
    if (cfg.mps) out.estimates.emplace_back(mps_fit ? std::optional(mps_fit->estimate) : std::nullopt);

    std::optional<PosteriorChain> chain;
    if (cfg.needs_chain()) {
        for (const auto* start : {mle_fit ? &*mle_fit : nullptr, mps_fit ? &*mps_fit : nullptr}) {
            if (!start) continue;
            try {
                const auto [sa, sb] = proposal_from_mle(*start);
                McmcConfig mc;
                mc.chain_length = cfg.chain_length;
                mc.burn_in = cfg.burn_in;
                mc.proposal_sd_alpha = sa;
                mc.proposal_sd_beta = sb;
                mc.seed = derive_seed(seed, 1);
                chain = run_mh(sample, cfg.prior, mc, start->estimate);
                break;
            } catch (const std::exception&) {
            }
        }
    }
    for (const auto& loss : losses) {
        std::optional<Params> est;
        if (chain) {
            try {
                est = bayes_estimate(*chain, loss, cfg.burn_in);
                if (!est->valid()) est.reset();
            } catch (const std::exception&) {
                est.reset();
            }
        }
        out.estimates.push_back(est);
    }

    if (cfg.aci) {
        std::optional<IntervalPair> iv;
        if (mle_fit) {
            try {
                iv = aci(*mle_fit, cfg.gamma);
            } catch (const std::exception&) {
            }
        }
        out.intervals.push_back(iv);
    }
    if (cfg.boot_p || cfg.boot_t) {
        std::optional<BootstrapReplicates> reps;
        if (mle_fit) {
            try {
                reps = parametric_bootstrap(sample, *mle_fit, cfg.bootstrap_size, derive_seed(seed, 2), 1);
            } catch (const std::exception&) {
            }
        }
        if (cfg.boot_p) {
            out.intervals.push_back(reps ? std::optional(boot_p_from(*reps, cfg.gamma)) : std::nullopt);
        }
        if (cfg.boot_t) {
            std::optional<IntervalPair> iv;
            if (reps) {
                try {
                    iv = boot_t_from(*reps, *mle_fit, cfg.gamma);
                } catch (const std::exception&) {
                }
            }
            out.intervals.push_back(iv);
        }
    }
    if (cfg.hpd) {
        std::optional<IntervalPair> iv;
        if (chain) iv = hpd(*chain, cfg.gamma, cfg.burn_in);
        out.intervals.push_back(iv);
    }
    return out;
}

bool same_plan(const PlanSpec& a, const PlanSpec& b) {
    return a.n == b.n && a.m == b.m && a.threshold == b.threshold && a.scheme == b.scheme &&
           (a.scheme != 0 || a.removals == b.removals);
}

std::string threshold_text(double t) { return std::isinf(t) ? "inf" : format_number(t); }

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::vector<std::string> estimator_names(const SimulationConfig& cfg) {
    std::vector<std::string> out;
    if (cfg.mle) out.emplace_back("MLE");
    if (cfg.mps) out.emplace_back("MPS");
    for (const auto& loss : bayes_losses(cfg)) out.push_back(loss.name());
    return out;
}

std::vector<std::string> interval_names(const SimulationConfig& cfg) {
    std::vector<std::string> out;
    if (cfg.aci) out.push_back(to_string(IntervalMethod::ACI));
    if (cfg.boot_p) out.push_back(to_string(IntervalMethod::BootP));
    if (cfg.boot_t) out.push_back(to_string(IntervalMethod::BootT));
    if (cfg.hpd) out.push_back(to_string(IntervalMethod::HPD));
    return out;
}

const EstimatorSummary* SimulationSummary::find_estimator(const PlanSpec& plan, const std::string& name) const {
    for (const auto& e : estimators) {
        if (same_plan(e.plan, plan) && e.estimator == name) return &e;
    }
    return nullptr;
}

const IntervalSummary* SimulationSummary::find_interval(const PlanSpec& plan, const std::string& name) const {
    for (const auto& e : intervals) {
        if (same_plan(e.plan, plan) && e.method == name) return &e;
    }
    return nullptr;
}

SimulationSummary run_campaign(const SimulationConfig& cfg) {
    cfg.validate();
    const auto est_names = estimator_names(cfg);
    const auto iv_names = interval_names(cfg);
    const auto reps = static_cast<std::size_t>(cfg.replications);
    SimulationSummary summary;

    for (std::size_t k = 0; k < cfg.plans.size(); ++k) {
        const PlanSpec& spec = cfg.plans[k];
        const CensoringPlan plan = spec.plan();
        std::vector<Replicate> results(reps);
        parallel_for(reps, cfg.threads, [&](std::size_t r) {
            results[r] = run_replicate(cfg, plan, derive_seed(cfg.master_seed, k, r));
        });

        for (std::size_t e = 0; e < est_names.size(); ++e) {
            EstimatorSummary row;
            row.plan = spec;
            row.estimator = est_names[e];
            for (const auto& res : results) {
                const auto& est = res.estimates[e];
                if (!est) {
                    ++row.failures;
                    continue;
                }
                ++row.successes;
                const double da = est->alpha - cfg.truth.alpha, db = est->beta - cfg.truth.beta;
                row.ab_alpha += std::abs(da);
                row.mse_alpha += da * da;
                row.ab_beta += std::abs(db);
                row.mse_beta += db * db;
            }
            if (row.successes > 0) {
                const double s = row.successes;
                row.ab_alpha /= s;
                row.mse_alpha /= s;
                row.ab_beta /= s;
                row.mse_beta /= s;
            }
            summary.estimators.push_back(row);
        }

        for (std::size_t i = 0; i < iv_names.size(); ++i) {
            IntervalSummary row;
            row.plan = spec;
            row.method = iv_names[i];
            for (const auto& res : results) {
                const auto& iv = res.intervals[i];
                if (!iv) {
                    ++row.failures;
                    continue;
                }
                ++row.successes;
                row.length_alpha += iv->alpha.length();
                row.length_beta += iv->beta.length();
                row.coverage_alpha += iv->alpha.contains(cfg.truth.alpha) ? 1.0 : 0.0;
                row.coverage_beta += iv->beta.contains(cfg.truth.beta) ? 1.0 : 0.0;
            }
            if (row.successes > 0) {
                const double s = row.successes;
                row.length_alpha /= s;
                row.length_beta /= s;
                row.coverage_alpha /= s;
                row.coverage_beta /= s;
            }
            summary.intervals.push_back(row);
        }
    }
    return summary;
}

std::string summary_to_table(const SimulationSummary& s, TableKind kind) {
    std::ostringstream os;
    auto key = [&](const PlanSpec& p) {
        os << p.n << ',' << p.m << ',' << threshold_text(p.threshold) << ',' << csv_field(p.scheme_label()) << ',';
    };
    if (kind == TableKind::Estimates) {
        os << "n,m,T,scheme,estimator,ab_alpha,mse_alpha,ab_beta,mse_beta,successes,failures\n";
        for (const auto& r : s.estimators) {
            key(r.plan);
            os << csv_field(r.estimator) << ',' << format_number(r.ab_alpha) << ',' << format_number(r.mse_alpha) << ','
               << format_number(r.ab_beta) << ',' << format_number(r.mse_beta) << ',' << r.successes << ','
               << r.failures << '\n';
        }
    } else {
        os << "n,m,T,scheme,method,length_alpha,coverage_alpha,length_beta,coverage_beta,successes,failures\n";
        for (const auto& r : s.intervals) {
            key(r.plan);
            os << r.method << ',' << format_number(r.length_alpha) << ',' << format_number(r.coverage_alpha) << ','
               << format_number(r.length_beta) << ',' << format_number(r.coverage_beta) << ',' << r.successes << ','
               << r.failures << '\n';
        }
    }
    return os.str();
}

}  // namespace gumbel2
