#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gumbel2/censoring.hpp"
#include "gumbel2/newton.hpp"

namespace gumbel2 {

/// Precomputed view of a sample for repeated likelihood evaluation.
///
///   l(a, b) = m ln a + m ln b - (a + 1) sum ln x_i - b sum x_i^-a
///             + sum_i Reff_i ln(1 - exp(-b x_i^-a))
///
/// Reff are the effective removals, which encode both the pre-threshold
/// removals and the terminal withdrawal R*_j at x_m.
class LogLikelihood {
public:
    explicit LogLikelihood(const AdaptiveCensoredSample& sample);

    double value(const Params& p) const;
    Evaluation evaluate(const Params& p, int order) const;

    int m() const { return static_cast<int>(log_times_.size()); }
    std::span<const double> log_times() const { return log_times_; }
    std::span<const double> weights() const { return weights_; }

private:
    std::vector<double> log_times_;
    std::vector<double> weights_;
    double sum_log_ = 0.0;
};

/// Throws EvaluationError when the result is not finite.
double loglik(const Params& p, const AdaptiveCensoredSample& s);
std::array<double, 2> score(const Params& p, const AdaptiveCensoredSample& s);
Matrix2 observed_information(const Params& p, const AdaptiveCensoredSample& s);

FitReport fit_mle(const AdaptiveCensoredSample& s, std::optional<Params> init = std::nullopt,
                  double tol = 1e-8, int max_iter = 200);

/// Closed form beta maximizing the uncensored part for fixed alpha: m / sum x^-alpha.
double closed_form_beta(const AdaptiveCensoredSample& s, double alpha);

struct ConditionalFit {
    double value = 0.0;    ///< maximizing parameter
    double loglik = 0.0;
    double score = 0.0;    ///< derivative of loglik w.r.t. the free parameter
    bool ok = false;
};

/// argmax over beta with alpha held fixed (loglik is strictly concave in beta).
ConditionalFit fit_beta_given_alpha(const AdaptiveCensoredSample& s, double alpha, double tol = 1e-10);

/// argmax over alpha with beta held fixed (grid bracket, Brent, Newton polish).
ConditionalFit fit_alpha_given_beta(const AdaptiveCensoredSample& s, double beta, double tol = 1e-10);

struct ProfilePoint {
    double value = 0.0;      ///< grid value of the profiled parameter
    double profiled = 0.0;   ///< max of loglik over the other parameter
    double argmax = 0.0;     ///< maximizing value of the other parameter
    double score = 0.0;      ///< residual inner score at argmax
    bool ok = false;
};

struct ProfileTable {
    std::vector<ProfilePoint> alpha;
    std::vector<ProfilePoint> beta;
};

ProfileTable profile_loglik(const AdaptiveCensoredSample& s, std::span<const double> grid_alpha,
                            std::span<const double> grid_beta);

}  // namespace gumbel2
