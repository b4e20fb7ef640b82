#include "gumbel2/mps.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gumbel2/mle.hpp"

namespace gumbel2 {

double SpacingSet::sum() const { return std::accumulate(d.begin(), d.end(), 0.0); }

SpacingSet spacings(const Params& p, const AdaptiveCensoredSample& s) {
    p.validate();
    s.validate();
    SpacingSet out;
    const auto& x = s.times;
    out.d.reserve(x.size() + 1);
    double z_prev = p.beta * std::pow(x[0], -p.alpha);
    out.d.push_back(std::exp(-z_prev));
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double z = p.beta * std::pow(x[i], -p.alpha);
        const double delta = z_prev * -std::expm1(-p.alpha * (std::log(x[i]) - std::log(x[i - 1])));
        out.d.push_back(std::exp(-z) * -std::expm1(-delta));
        z_prev = z;
    }
    out.d.push_back(-std::expm1(-z_prev));
    return out;
}

LogSpacing::LogSpacing(const AdaptiveCensoredSample& sample) {
    sample.validate();
    for (std::size_t i = 0; i < sample.times.size(); ++i) {
        log_times_.push_back(std::log(sample.times[i]));
        tied_.push_back(i > 0 && sample.times[i] == sample.times[i - 1]);
    }
    weights_.assign(sample.effective_removals.begin(), sample.effective_removals.end());
}

Evaluation LogSpacing::evaluate(const Params& p, int order) const {
    const double a = p.alpha, b = p.beta;
    const std::size_t m = log_times_.size();
    Evaluation ev;
    double ga = 0.0, gb = 0.0, haa = 0.0, hab = 0.0, hbb = 0.0;

    // Derivatives of z_i = b exp(-a lx_i).
    struct Z {
        double z, za, zb, zaa, zab;
    };
    auto zterms = [&](std::size_t i) {
        const double lx = log_times_[i];
        const double z = b * std::exp(-a * lx);
        return Z{z, -z * lx, z / b, z * lx * lx, -z * lx / b};
    };
    // Adds w * ln(1 - exp(-z)) and its derivatives.
    auto add_log_survival = [&](const Z& t, double w) {
        ev.value += w * log1mexp(t.z);
        if (order == 0) return;
        const double c1 = w * log1mexp_d1(t.z), c2 = w * log1mexp_d2(t.z);
        ga += c1 * t.za;
        gb += c1 * t.zb;
        haa += c1 * t.zaa + c2 * t.za * t.za;
        hab += c1 * t.zab + c2 * t.za * t.zb;
        hbb += c2 * t.zb * t.zb;
    };
    // Adds -z (the log of exp(-z)) and its derivatives.
    auto add_neg_z = [&](const Z& t) {
        ev.value -= t.z;
        ga -= t.za;
        gb -= t.zb;
        haa -= t.zaa;
        hab -= t.zab;
    };

    Z prev = zterms(0);
    add_neg_z(prev);  // ln D_1 = -z_1
    for (std::size_t i = 1; i < m; ++i) {
        const Z cur = zterms(i);
        if (tied_[i]) {
            // ln f(x_i) = ln a + ln b - (a + 1) lx_i - z_i
            ev.value += std::log(a) + std::log(b) - (a + 1.0) * log_times_[i];
            ga += 1.0 / a - log_times_[i];
            gb += 1.0 / b;
            haa -= 1.0 / (a * a);
            hbb -= 1.0 / (b * b);
            add_neg_z(cur);
        } else {
            // ln D_i = -z_i + ln(1 - exp(-delta)), delta = z_{i-1} - z_i
            const double delta = prev.z * -std::expm1(-a * (log_times_[i] - log_times_[i - 1]));
            add_neg_z(cur);
            ev.value += log1mexp(delta);
            if (order > 0) {
                const double da = prev.za - cur.za, db = prev.zb - cur.zb;
                const double daa = prev.zaa - cur.zaa, dab = prev.zab - cur.zab;
                const double c1 = log1mexp_d1(delta), c2 = log1mexp_d2(delta);
                ga += c1 * da;
                gb += c1 * db;
                haa += c1 * daa + c2 * da * da;
                hab += c1 * dab + c2 * da * db;
                hbb += c2 * db * db;
            }
        }
        prev = cur;
    }
    add_log_survival(prev, 1.0);  // ln D_{m+1} = ln(1 - exp(-z_m))
    for (std::size_t i = 0; i < m; ++i) {
        if (weights_[i] != 0.0) add_log_survival(zterms(i), weights_[i]);
    }
    if (order > 0) ev.gradient = {ga, gb};
    if (order > 1) ev.hessian = {haa, hab, hab, hbb};
    return ev;
}

double log_spacing(const Params& p, const AdaptiveCensoredSample& s) {
    p.validate();
    const double v = LogSpacing(s).value(p);
    if (!std::isfinite(v)) throw EvaluationError("log product spacing is not finite");
    return v;
}

std::array<double, 2> log_spacing_gradient(const Params& p, const AdaptiveCensoredSample& s) {
    p.validate();
    const auto ev = LogSpacing(s).evaluate(p, 1);
    if (!std::isfinite(ev.gradient[0]) || !std::isfinite(ev.gradient[1])) {
        throw EvaluationError("log product spacing gradient is not finite");
    }
    return ev.gradient;
}

FitReport fit_mps(const AdaptiveCensoredSample& s, std::optional<Params> init, double tol, int max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const LogSpacing ls(s);
    const Objective objective = [&ls](const Params& p, int order) { return ls.evaluate(p, order); };
    NewtonOptions options;
    options.tol = tol;
    options.max_iter = max_iter;
    return maximize_with_restarts(objective, init, [&s](double a) { return closed_form_beta(s, a); }, options);
}

}  // namespace gumbel2
