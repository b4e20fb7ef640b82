#pragma once

#include <functional>
#include <optional>

#include "gumbel2/models.hpp"
#include "gumbel2/numeric.hpp"

namespace gumbel2 {

struct FitReport {
    Params estimate;
    double objective = 0.0;  ///< loglik (MLE) or log-spacing (MPS) at the estimate
    int iterations = 0;
    bool converged = false;
    double score_norm = 0.0;  ///< sup-norm of the gradient in (alpha, beta)
    Matrix2 observed_info;    ///< negative Hessian at the estimate
};

struct NewtonOptions {
    double tol = 1e-8;        ///< score sup-norm threshold
    int max_iter = 200;
    double step_tol = 1e-10;  ///< log-parameter step sup-norm threshold
    int max_halvings = 30;
};

/// order 0: value only; 1: + gradient; 2: + Hessian.
using Objective = std::function<Evaluation(const Params&, int order)>;

/// Maximizes the objective by damped Newton iterations in (ln alpha, ln beta).
/// Non-concave local Hessians are replaced by their negative-definite
/// eigenvalue reflection; the step is halved until the objective does not
/// decrease.
FitReport maximize_newton(const Objective& objective, Params init, const NewtonOptions& options = {});

/// Single start, then the multi-start fallback over alpha0 in {0.5, 1, 2, 4}
/// when the first attempt fails. beta0 is supplied by `beta_for_alpha`.
FitReport maximize_with_restarts(const Objective& objective, std::optional<Params> init,
                                 const std::function<double(double)>& beta_for_alpha,
                                 const NewtonOptions& options);

}  // namespace gumbel2
