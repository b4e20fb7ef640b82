#include "gumbel2/models.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "gumbel2/numeric.hpp"

namespace gumbel2 {

namespace {

void require_positive_x(double x) {
    if (!(x > 0.0)) throw std::domain_error("x must be positive");
}

void require_unit_open(double u) {
    if (!(u > 0.0 && u < 1.0)) throw std::domain_error("probability must lie in (0,1)");
}

}  // namespace

bool Params::valid() const {
    return alpha > 0.0 && beta > 0.0 && std::isfinite(alpha) && std::isfinite(beta);
}

void Params::validate() const {
    if (!valid()) throw std::invalid_argument("alpha and beta must be positive and finite");
}

double cdf(const Params& p, double x) {
    p.validate();
    require_positive_x(x);
    return std::exp(-p.beta * std::pow(x, -p.alpha));
}

double log_pdf(const Params& p, double x) {
    p.validate();
    require_positive_x(x);
    const double lx = std::log(x);
    return std::log(p.alpha) + std::log(p.beta) - (p.alpha + 1.0) * lx - p.beta * std::exp(-p.alpha * lx);
}

double pdf(const Params& p, double x) { return std::exp(log_pdf(p, x)); }

double hazard(const Params& p, double x) {
    p.validate();
    require_positive_x(x);
    const double z = p.beta * std::pow(x, -p.alpha);
    // expm1 keeps the denominator accurate as z -> 0 (x -> infinity).
    return p.alpha * p.beta * std::pow(x, -p.alpha - 1.0) / std::expm1(z);
}

double quantile(const Params& p, double u) {
    p.validate();
    require_unit_open(u);
    return std::pow(p.beta / -std::log(u), 1.0 / p.alpha);
}

std::vector<double> sample_iid(const Params& p, std::size_t count, std::uint64_t seed) {
    p.validate();
    if (count == 0) throw std::invalid_argument("sample count must be at least 1");
    std::mt19937_64 rng(seed);
    std::vector<double> out(count);
    for (auto& x : out) x = quantile(p, open_uniform(rng));
    return out;
}

void ComparatorModel::validate() const {
    if (!(p1 > 0.0 && p2 > 0.0 && std::isfinite(p1) && std::isfinite(p2))) {
        throw std::invalid_argument("comparator parameters must be positive and finite");
    }
}

std::string to_string(ComparatorFamily family) {
    switch (family) {
        case ComparatorFamily::NH: return "NH";
        case ComparatorFamily::BurrIII: return "BurrIII";
        case ComparatorFamily::IKum: return "IKum";
    }
    return "?";
}

double comparator_cdf(const ComparatorModel& m, double x) {
    m.validate();
    require_positive_x(x);
    switch (m.family) {
        case ComparatorFamily::NH: return -std::expm1(1.0 - std::pow(1.0 + m.p2 * x, m.p1));
        case ComparatorFamily::BurrIII: return std::pow(1.0 + std::pow(x, -m.p1), -m.p2);
        case ComparatorFamily::IKum: return std::pow(-std::expm1(-m.p1 * std::log1p(x)), m.p2);
    }
    return 0.0;
}

double comparator_log_pdf(const ComparatorModel& m, double x) {
    m.validate();
    require_positive_x(x);
    const double base = std::log(m.p1) + std::log(m.p2);
    switch (m.family) {
        case ComparatorFamily::NH: {
            const double l = std::log1p(m.p2 * x);
            return base + (m.p1 - 1.0) * l + 1.0 - std::exp(m.p1 * l);
        }
        case ComparatorFamily::BurrIII: {
            const double lx = std::log(x);
            return base - (m.p1 + 1.0) * lx - (m.p2 + 1.0) * std::log1p(std::exp(-m.p1 * lx));
        }
        case ComparatorFamily::IKum: {
            const double l = std::log1p(x);
            return base - (m.p1 + 1.0) * l + (m.p2 - 1.0) * log1mexp(m.p1 * l);
        }
    }
    return 0.0;
}

double comparator_quantile(const ComparatorModel& m, double u) {
    m.validate();
    require_unit_open(u);
    switch (m.family) {
        case ComparatorFamily::NH: return (std::pow(1.0 - std::log1p(-u), 1.0 / m.p1) - 1.0) / m.p2;
        case ComparatorFamily::BurrIII: return std::pow(std::pow(u, -1.0 / m.p2) - 1.0, -1.0 / m.p1);
        case ComparatorFamily::IKum: return std::pow(1.0 - std::pow(u, 1.0 / m.p2), -1.0 / m.p1) - 1.0;
    }
    return 0.0;
}

double comparator_loglik(const ComparatorModel& m, std::span<const double> data) {
    double total = 0.0;
    for (double x : data) total += comparator_log_pdf(m, x);
    return total;
}

}  // namespace gumbel2
