#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gumbel2/bayes.hpp"
#include "gumbel2/censoring.hpp"
#include "gumbel2/intervals.hpp"

namespace gumbel2 {

struct PlanSpec {
    int n = 30;
    int m = 15;
    double threshold = 1.5;
    int scheme = 1;             ///< 1, 2, 3, or 0 for an explicit removal vector
    std::vector<int> removals;  ///< used when scheme == 0

    CensoringPlan plan() const;
    std::string scheme_label() const;  ///< "I", "II", "III" or run-length text
};

struct SimulationConfig {
    Params truth{1.5, 0.75};
    std::vector<PlanSpec> plans;
    int replications = 2000;

    bool mle = true;
    bool mps = true;
    bool self = true;
    std::vector<double> linex_p{-0.25, 0.25};
    std::vector<double> gelf_q{-0.25, 0.25};

    bool aci = true;
    bool boot_p = false;
    bool boot_t = false;
    bool hpd = true;
    int bootstrap_size = 1000;

    GammaPriorPair prior{3.0, 2.0, 3.0, 4.0};
    int chain_length = 5000;
    int burn_in = 1000;
    double gamma = 0.05;
    std::uint64_t master_seed = 20240501;
    unsigned threads = 0;  ///< 0 = hardware concurrency

    void validate() const;
    bool needs_chain() const { return self || !linex_p.empty() || !gelf_q.empty() || hpd; }
};

struct EstimatorSummary {
    PlanSpec plan;
    std::string estimator;
    double ab_alpha = 0.0, mse_alpha = 0.0;
    double ab_beta = 0.0, mse_beta = 0.0;
    int successes = 0;
    int failures = 0;
};

struct IntervalSummary {
    PlanSpec plan;
    std::string method;
    double length_alpha = 0.0, coverage_alpha = 0.0;
    double length_beta = 0.0, coverage_beta = 0.0;
    int successes = 0;
    int failures = 0;
};

struct SimulationSummary {
    std::vector<EstimatorSummary> estimators;
    std::vector<IntervalSummary> intervals;

    const EstimatorSummary* find_estimator(const PlanSpec& plan, const std::string& name) const;
    const IntervalSummary* find_interval(const PlanSpec& plan, const std::string& name) const;
};

/// Estimator names in table order for a config ("MLE", "MPS", "LINEX(p=-0.25)", ...).
std::vector<std::string> estimator_names(const SimulationConfig& cfg);
std::vector<std::string> interval_names(const SimulationConfig& cfg);

/// Replicate r of plan k draws its sample, chain and bootstrap streams from
/// derive_seed(master_seed, k, r). Aggregation runs in replicate order, so
/// the summary does not depend on the thread count.
SimulationSummary run_campaign(const SimulationConfig& cfg);

enum class TableKind { Estimates, Intervals };

/// Comma-separated rows keyed by (n, m, T, scheme, estimator or method).
std::string summary_to_table(const SimulationSummary& s, TableKind kind = TableKind::Estimates);

}  // namespace gumbel2
