#include "gumbel2/mle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>

namespace gumbel2 {

LogLikelihood::LogLikelihood(const AdaptiveCensoredSample& sample) {
    sample.validate();
    log_times_.reserve(sample.times.size());
    for (double x : sample.times) {
        log_times_.push_back(std::log(x));
        sum_log_ += log_times_.back();
    }
    weights_.assign(sample.effective_removals.begin(), sample.effective_removals.end());
}

double LogLikelihood::value(const Params& p) const {
    const double m = static_cast<double>(log_times_.size());
    double total = m * (std::log(p.alpha) + std::log(p.beta)) - (p.alpha + 1.0) * sum_log_;
    for (std::size_t i = 0; i < log_times_.size(); ++i) {
        const double z = p.beta * std::exp(-p.alpha * log_times_[i]);
        total -= z;
        if (weights_[i] != 0.0) total += weights_[i] * log1mexp(z);
    }
    return total;
}

Evaluation LogLikelihood::evaluate(const Params& p, int order) const {
    Evaluation ev;
    if (order == 0) {
        ev.value = value(p);
        return ev;
    }
    const double a = p.alpha, b = p.beta;
    const double m = static_cast<double>(log_times_.size());
    ev.value = m * (std::log(a) + std::log(b)) - (a + 1.0) * sum_log_;
    double ga = m / a - sum_log_, gb = m / b;
    double haa = -m / (a * a), hab = 0.0, hbb = -m / (b * b);
    for (std::size_t i = 0; i < log_times_.size(); ++i) {
        const double lx = log_times_[i];
        const double z = b * std::exp(-a * lx);
        const double w = weights_[i];
        ev.value -= z;
        double c1 = -1.0, c2 = 0.0;
        if (w != 0.0) {
            ev.value += w * log1mexp(z);
            c1 += w * log1mexp_d1(z);
            c2 = w * log1mexp_d2(z);
        }
        // z_a = -z lx, z_b = z / b, z_aa = z lx^2, z_ab = -z lx / b, z_bb = 0
        const double za = -z * lx, zb = z / b;
        ga += c1 * za;
        gb += c1 * zb;
        haa += c1 * z * lx * lx + c2 * za * za;
        hab += c1 * (-z * lx / b) + c2 * za * zb;
        hbb += c2 * zb * zb;
    }
    ev.gradient = {ga, gb};
    ev.hessian = {haa, hab, hab, hbb};
    return ev;
}

double loglik(const Params& p, const AdaptiveCensoredSample& s) {
    p.validate();
    const double v = LogLikelihood(s).value(p);
    if (!std::isfinite(v)) throw EvaluationError("log-likelihood is not finite");
    return v;
}

std::array<double, 2> score(const Params& p, const AdaptiveCensoredSample& s) {
    p.validate();
    const auto ev = LogLikelihood(s).evaluate(p, 1);
    if (!std::isfinite(ev.gradient[0]) || !std::isfinite(ev.gradient[1])) {
        throw EvaluationError("score is not finite");
    }
    return ev.gradient;
}

Matrix2 observed_information(const Params& p, const AdaptiveCensoredSample& s) {
    p.validate();
    const auto info = LogLikelihood(s).evaluate(p, 2).hessian.negated();
    if (!std::isfinite(info.a11) || !std::isfinite(info.a12) || !std::isfinite(info.a22)) {
        throw EvaluationError("observed information is not finite");
    }
    return info;
}

double closed_form_beta(const AdaptiveCensoredSample& s, double alpha) {
    double sum = 0.0;
    for (double x : s.times) sum += std::pow(x, -alpha);
    return static_cast<double>(s.m()) / sum;
}

FitReport fit_mle(const AdaptiveCensoredSample& s, std::optional<Params> init, double tol, int max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const LogLikelihood ll(s);
    const Objective objective = [&ll](const Params& p, int order) { return ll.evaluate(p, order); };
    NewtonOptions options;
    options.tol = tol;
    options.max_iter = max_iter;
    return maximize_with_restarts(objective, init, [&s](double a) { return closed_form_beta(s, a); }, options);
}

namespace {

// One-dimensional damped Newton in log coordinates for a concave-in-log
// objective. f returns (value, d/dtheta, d2/dtheta2) in the original scale.
template <class F>
ConditionalFit newton_1d(const F& f, double start, double tol) {
    ConditionalFit out;
    double x = start;
    auto [v, d1, d2] = f(x);
    for (int it = 0; it < 200 && std::isfinite(v); ++it) {
        if (std::abs(d1) < tol) break;
        const double g = x * d1;
        double h = x * x * d2 + x * d1;
        if (!(h < 0.0)) h = -std::max(std::abs(h), 1.0);
        double step = std::clamp(-g / h, -2.0, 2.0);
        bool accepted = false;
        for (int k = 0; k <= 30; ++k, step *= 0.5) {
            const double trial = x * std::exp(step);
            const auto [tv, t1, t2] = f(trial);
            if (std::isfinite(tv) && tv >= v - 8.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(v))) {
                x = trial;
                v = tv;
                d1 = t1;
                d2 = t2;
                accepted = true;
                break;
            }
        }
        if (!accepted || std::abs(step) < 1e-15) break;
    }
    out.value = x;
    out.loglik = v;
    out.score = d1;
    out.ok = std::isfinite(v) && std::abs(d1) < tol;
    return out;
}

}  // namespace

ConditionalFit fit_beta_given_alpha(const AdaptiveCensoredSample& s, double alpha, double tol) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    const LogLikelihood ll(s);
    auto f = [&](double beta) {
        const auto ev = ll.evaluate({alpha, beta}, 2);
        return std::tuple{ev.value, ev.gradient[1], ev.hessian.a22};
    };
    return newton_1d(f, closed_form_beta(s, alpha), tol);
}

ConditionalFit fit_alpha_given_beta(const AdaptiveCensoredSample& s, double beta, double tol) {
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
    const LogLikelihood ll(s);
    // Coarse log grid brackets the global maximum before Brent refines it.
    constexpr int kGrid = 241;
    const double lo = std::log(1e-3), hi = std::log(1e3);
    int best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < kGrid; ++k) {
        const double la = lo + (hi - lo) * k / (kGrid - 1);
        const double v = ll.value({std::exp(la), beta});
        if (std::isfinite(v) && v > best_value) {
            best_value = v;
            best = k;
        }
    }
    ConditionalFit out;
    if (!std::isfinite(best_value)) return out;
    const double step = (hi - lo) / (kGrid - 1);
    const double left = lo + step * std::max(best - 1, 0);
    const double right = lo + step * std::min(best + 1, kGrid - 1);
    const auto [la, neg] = boost::math::tools::brent_find_minima(
        [&](double t) {
            const double v = ll.value({std::exp(t), beta});
            return std::isfinite(v) ? -v : std::numeric_limits<double>::max();
        },
        left, right, std::numeric_limits<double>::digits / 2);
    (void)neg;
    auto f = [&](double alpha) {
        const auto ev = ll.evaluate({alpha, beta}, 2);
        return std::tuple{ev.value, ev.gradient[0], ev.hessian.a11};
    };
    return newton_1d(f, std::exp(la), tol);
}

ProfileTable profile_loglik(const AdaptiveCensoredSample& s, std::span<const double> grid_alpha,
                            std::span<const double> grid_beta) {
    if (grid_alpha.empty() || grid_beta.empty()) throw std::invalid_argument("profile grids must be nonempty");
    auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
    if (!std::all_of(grid_alpha.begin(), grid_alpha.end(), positive) ||
        !std::all_of(grid_beta.begin(), grid_beta.end(), positive)) {
        throw std::invalid_argument("profile grids must hold positive values");
    }
    ProfileTable table;
    for (double a : grid_alpha) {
        const auto fit = fit_beta_given_alpha(s, a, 1e-8);
        table.alpha.push_back({a, fit.loglik, fit.value, fit.score, fit.ok});
    }
    for (double b : grid_beta) {
        const auto fit = fit_alpha_given_beta(s, b, 1e-8);
        table.beta.push_back({b, fit.loglik, fit.value, fit.score, fit.ok});
    }
    return table;
}

}  // namespace gumbel2
