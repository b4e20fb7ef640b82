#include "gumbel2/newton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gumbel2 {

namespace {

constexpr double kMaxLogStep = 2.0;

double sup_norm(double a, double b) { return std::max(std::abs(a), std::abs(b)); }

// Newton direction -H^{-1} g with H forced negative definite.
std::array<double, 2> ascent_direction(const Matrix2& h, const std::array<double, 2>& g) {
    const double mean = 0.5 * (h.a11 + h.a22);
    const double half_gap = std::sqrt(0.25 * (h.a11 - h.a22) * (h.a11 - h.a22) + h.a12 * h.a12);
    double l1 = mean + half_gap;
    double l2 = mean - half_gap;
    if (l1 < 0.0 && l2 < 0.0) {
        const Matrix2 inv = h.inverse();
        return {-(inv.a11 * g[0] + inv.a12 * g[1]), -(inv.a21 * g[0] + inv.a22 * g[1])};
    }
    // Eigenvectors of a symmetric 2x2.
    double v1x, v1y;
    if (h.a12 != 0.0) {
        v1x = l1 - h.a22;
        v1y = h.a12;
    } else if (h.a11 >= h.a22) {
        v1x = 1.0;
        v1y = 0.0;
    } else {
        v1x = 0.0;
        v1y = 1.0;
    }
    const double norm = std::hypot(v1x, v1y);
    v1x /= norm;
    v1y /= norm;
    const double v2x = -v1y, v2y = v1x;
    const double floor = 1e-6 * std::max({std::abs(l1), std::abs(l2), 1.0});
    l1 = -std::max(std::abs(l1), floor);
    l2 = -std::max(std::abs(l2), floor);
    const double c1 = (v1x * g[0] + v1y * g[1]) / l1;
    const double c2 = (v2x * g[0] + v2y * g[1]) / l2;
    return {-(c1 * v1x + c2 * v2x), -(c1 * v1y + c2 * v2y)};
}

}  // namespace

FitReport maximize_newton(const Objective& objective, Params p, const NewtonOptions& options) {
    FitReport report;
    report.estimate = p;
    Evaluation ev = objective(p, 2);
    if (!std::isfinite(ev.value)) {
        report.objective = ev.value;
        report.score_norm = std::numeric_limits<double>::infinity();
        return report;
    }
    double last_step = std::numeric_limits<double>::infinity();
    int it = 0;
    for (; it < options.max_iter; ++it) {
        const double score = sup_norm(ev.gradient[0], ev.gradient[1]);
        if (score < options.tol && last_step < options.step_tol) break;

        const double a = p.alpha, b = p.beta;
        const std::array<double, 2> g{a * ev.gradient[0], b * ev.gradient[1]};
        const Matrix2 h{a * a * ev.hessian.a11 + a * ev.gradient[0], a * b * ev.hessian.a12,
                        a * b * ev.hessian.a21, b * b * ev.hessian.a22 + b * ev.gradient[1]};
        auto step = ascent_direction(h, g);
        if (!std::isfinite(step[0]) || !std::isfinite(step[1])) break;
        const double size = sup_norm(step[0], step[1]);
        if (size > kMaxLogStep) {
            step[0] *= kMaxLogStep / size;
            step[1] *= kMaxLogStep / size;
        }

        const double slack = 8.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(ev.value));
        double t = 1.0;
        bool accepted = false;
        Params trial;
        for (int k = 0; k <= options.max_halvings; ++k, t *= 0.5) {
            trial = {a * std::exp(t * step[0]), b * std::exp(t * step[1])};
            if (!trial.valid()) continue;
            const double v = objective(trial, 0).value;
            if (std::isfinite(v) && v >= ev.value - slack) {
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
        const Evaluation next = objective(trial, 2);
        if (!std::isfinite(next.value)) break;
        p = trial;
        ev = next;
        last_step = t * sup_norm(step[0], step[1]);
    }

    report.estimate = p;
    report.objective = ev.value;
    report.iterations = it;
    report.score_norm = sup_norm(ev.gradient[0], ev.gradient[1]);
    report.observed_info = ev.hessian.negated();
    report.converged = report.score_norm < options.tol && report.observed_info.is_positive_definite();
    return report;
}

FitReport maximize_with_restarts(const Objective& objective, std::optional<Params> init,
                                 const std::function<double(double)>& beta_for_alpha,
                                 const NewtonOptions& options) {
    std::vector<Params> starts;
    if (init) {
        init->validate();
        starts.push_back(*init);
    }
    for (double a0 : {1.0, 0.5, 2.0, 4.0}) {
        const double b0 = beta_for_alpha(a0);
        if (std::isfinite(b0) && b0 > 0.0) starts.push_back({a0, b0});
    }

    std::optional<FitReport> best;
    for (std::size_t i = 0; i < starts.size(); ++i) {
        FitReport r = maximize_newton(objective, starts[i], options);
        if (r.converged && i == 0) return r;
        const bool better = !best || (r.converged && !best->converged) ||
                            (r.converged == best->converged && r.objective > best->objective);
        if (better && std::isfinite(r.objective)) best = r;
    }
    if (!best) {
        FitReport failed;
        failed.estimate = starts.empty() ? Params{} : starts.front();
        failed.objective = -std::numeric_limits<double>::infinity();
        return failed;
    }
    return *best;
}

}  // namespace gumbel2
