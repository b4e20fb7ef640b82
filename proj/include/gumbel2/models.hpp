#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gumbel2 {

/// Gumbel type-II parameters: F(x) = exp(-beta * x^-alpha), x > 0.
struct Params {
    double alpha = 1.0;  ///< shape
    double beta = 1.0;   ///< scale (units of x^alpha)

    bool valid() const;
    void validate() const;  // throws std::invalid_argument
};

double cdf(const Params& p, double x);
double pdf(const Params& p, double x);
double log_pdf(const Params& p, double x);
double hazard(const Params& p, double x);
double quantile(const Params& p, double u);

/// Inversion sampling; deterministic for a given seed.
std::vector<double> sample_iid(const Params& p, std::size_t count, std::uint64_t seed);

/// Two-parameter families used only for model comparison.
///   NH:       F = 1 - exp(1 - (1 + p2 x)^p1)
///   BurrIII:  F = (1 + x^-p1)^-p2
///   IKum:     F = (1 - (1 + x)^-p1)^p2
enum class ComparatorFamily { NH, BurrIII, IKum };

struct ComparatorModel {
    ComparatorFamily family = ComparatorFamily::NH;
    double p1 = 1.0;
    double p2 = 1.0;

    void validate() const;
};

std::string to_string(ComparatorFamily family);

double comparator_cdf(const ComparatorModel& m, double x);
double comparator_log_pdf(const ComparatorModel& m, double x);
double comparator_quantile(const ComparatorModel& m, double u);
double comparator_loglik(const ComparatorModel& m, std::span<const double> data);

}  // namespace gumbel2
