#pragma once

#include <optional>
#include <vector>

#include "gumbel2/censoring.hpp"
#include "gumbel2/newton.hpp"

namespace gumbel2 {

/// D_1 = F(x_1), D_i = F(x_i) - F(x_{i-1}), D_{m+1} = 1 - F(x_m).
struct SpacingSet {
    std::vector<double> d;
    double sum() const;
};

SpacingSet spacings(const Params& p, const AdaptiveCensoredSample& s);

/// Log product-spacing objective
///
///   sum_{i=1}^{m+1} ln D_i + sum_i Reff_i ln(1 - F(x_i))
///
/// A spacing between tied observations (x_i == x_{i-1}) is replaced by the
/// density f(x_i), so data with repeated values keep a finite objective.
class LogSpacing {
public:
    explicit LogSpacing(const AdaptiveCensoredSample& sample);

    double value(const Params& p) const { return evaluate(p, 0).value; }
    Evaluation evaluate(const Params& p, int order) const;

private:
    std::vector<double> log_times_;
    std::vector<double> weights_;
    std::vector<bool> tied_;  // tied_[i]: x_i == x_{i-1}
};

/// Throws EvaluationError when the objective is -inf or nan.
double log_spacing(const Params& p, const AdaptiveCensoredSample& s);
std::array<double, 2> log_spacing_gradient(const Params& p, const AdaptiveCensoredSample& s);

FitReport fit_mps(const AdaptiveCensoredSample& s, std::optional<Params> init = std::nullopt,
                  double tol = 1e-8, int max_iter = 200);

}  // namespace gumbel2
