#include "gumbel2/censoring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gumbel2/numeric.hpp"

namespace gumbel2 {

void CensoringPlan::validate() const {
    if (m < 1 || m > n) throw std::invalid_argument("censoring plan needs 1 <= m <= n");
    if (static_cast<int>(removals.size()) != m) {
        throw std::invalid_argument("removal vector must have exactly m entries");
    }
    if (std::any_of(removals.begin(), removals.end(), [](int r) { return r < 0; })) {
        throw std::invalid_argument("removals must be nonnegative");
    }
    if (std::accumulate(removals.begin(), removals.end(), 0L) != n - m) {
        throw std::invalid_argument("removals must sum to n - m");
    }
    if (!(threshold > 0.0)) throw std::invalid_argument("threshold T must be positive");
}

void AdaptiveCensoredSample::validate() const {
    plan.validate();
    if (m() != plan.m) throw std::invalid_argument("sample must hold exactly m failure times");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0) || !std::isfinite(times[i])) {
            throw std::invalid_argument("failure times must be positive and finite");
        }
        if (i > 0 && times[i] < times[i - 1]) throw std::invalid_argument("failure times must be sorted");
    }
    const auto j = std::count_if(times.begin(), times.end(), [&](double t) { return t <= plan.threshold; });
    if (j != change_point) throw std::invalid_argument("change point does not match threshold");
    if (effective_removals != gumbel2::effective_removals(plan, change_point)) {
        throw std::invalid_argument("effective removals inconsistent with plan and change point");
    }
}

std::vector<int> removal_scheme(int kind, int n, int m) {
    if (m < 1 || m > n) throw std::invalid_argument("scheme needs 1 <= m <= n");
    std::vector<int> r(static_cast<std::size_t>(m), 0);
    switch (kind) {
        case 1:
            r.back() = n - m;
            break;
        case 2:
            if (n < 2 * m - 1) throw std::invalid_argument("scheme 2 needs n >= 2m - 1");
            std::fill(r.begin(), r.end(), 1);
            r.front() = n - 2 * m + 1;
            break;
        case 3:
            if (m < 6 || n - m < 5) throw std::invalid_argument("scheme 3 needs m >= 6 and n - m >= 5");
            r.front() = n - m - 5;
            std::fill(r.end() - 5, r.end(), 1);
            break;
        default:
            throw std::invalid_argument("scheme kind must be 1, 2 or 3");
    }
    return r;
}

std::vector<int> effective_removals(const CensoringPlan& plan, int change_point) {
    const int m = plan.m;
    if (change_point < 0 || change_point > m) throw std::invalid_argument("change point out of range");
    if (change_point >= m - 1) return plan.removals;
    std::vector<int> r(static_cast<std::size_t>(m), 0);
    int kept = 0;
    for (int i = 0; i < change_point; ++i) {
        r[i] = plan.removals[i];
        kept += r[i];
    }
    r.back() = plan.n - m - kept;
    return r;
}

AdaptiveCensoredSample make_sample(std::vector<double> times, const CensoringPlan& plan) {
    plan.validate();
    AdaptiveCensoredSample s;
    s.change_point = static_cast<int>(
        std::count_if(times.begin(), times.end(), [&](double t) { return t <= plan.threshold; }));
    s.times = std::move(times);
    s.plan = plan;
    if (s.m() != plan.m) throw std::invalid_argument("sample must hold exactly m failure times");
    s.effective_removals = effective_removals(plan, s.change_point);
    s.validate();
    return s;
}

AdaptiveCensoredSample make_complete_sample(std::vector<double> data) {
    if (data.empty()) throw std::invalid_argument("complete sample needs at least one value");
    std::sort(data.begin(), data.end());
    CensoringPlan plan;
    plan.n = plan.m = static_cast<int>(data.size());
    plan.removals.assign(data.size(), 0);
    return make_sample(std::move(data), plan);
}

namespace {

// Runs the life test on sorted lifetimes: the smallest survivor fails next;
// after the i-th failure (i < m) R_i random survivors are withdrawn only if
// that failure happened at or before T.
AdaptiveCensoredSample run_life_test(std::vector<double> alive, const CensoringPlan& plan,
                                     std::mt19937_64& rng) {
    std::vector<double> observed;
    observed.reserve(static_cast<std::size_t>(plan.m));
    std::size_t head = 0;
    for (int i = 0; i < plan.m; ++i) {
        const double x = alive[head++];
        observed.push_back(x);
        if (i == plan.m - 1 || x > plan.threshold) continue;
        for (int r = 0; r < plan.removals[i]; ++r) {
            const auto k = head + uniform_index(rng, alive.size() - head);
            alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(k));
        }
    }
    return make_sample(std::move(observed), plan);
}

}  // namespace

AdaptiveCensoredSample generate_sample(const Params& p, const CensoringPlan& plan, std::uint64_t seed) {
    p.validate();
    plan.validate();
    std::mt19937_64 rng(seed);
    std::vector<double> lifetimes(static_cast<std::size_t>(plan.n));
    for (auto& x : lifetimes) x = std::pow(p.beta / -std::log(open_uniform(rng)), 1.0 / p.alpha);
    std::sort(lifetimes.begin(), lifetimes.end());
    return run_life_test(std::move(lifetimes), plan, rng);
}

AdaptiveCensoredSample censor_real_data(std::span<const double> data, const CensoringPlan& plan,
                                        std::uint64_t seed) {
    plan.validate();
    if (static_cast<int>(data.size()) != plan.n) {
        throw std::invalid_argument("dataset length must equal plan n");
    }
    std::vector<double> lifetimes(data.begin(), data.end());
    if (std::any_of(lifetimes.begin(), lifetimes.end(), [](double x) { return !(x > 0.0); })) {
        throw std::invalid_argument("lifetimes must be positive");
    }
    std::stable_sort(lifetimes.begin(), lifetimes.end());
    std::mt19937_64 rng(seed);
    return run_life_test(std::move(lifetimes), plan, rng);
}

std::vector<int> parse_removals(const std::string& text) {
    std::vector<int> out;
    std::string cleaned;
    for (char c : text) {
        if (c != '(' && c != ')' && c != ' ') cleaned.push_back(c);
    }
    std::stringstream ss(cleaned);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw std::invalid_argument("empty entry in removal vector");
        const auto star = token.find('*');
        std::size_t used = 0;
        try {
            if (star == std::string::npos) {
                const int v = std::stoi(token, &used);
                if (used != token.size() || v < 0) throw std::invalid_argument(token);
                out.push_back(v);
            } else {
                const std::string vs = token.substr(0, star);
                const std::string cs = token.substr(star + 1);
                std::size_t used_count = 0;
                const int v = std::stoi(vs, &used);
                const int count = std::stoi(cs, &used_count);
                if (used != vs.size() || used_count != cs.size() || v < 0 || count < 1) {
                    throw std::invalid_argument(token);
                }
                out.insert(out.end(), static_cast<std::size_t>(count), v);
            }
        } catch (const std::logic_error&) {
            throw std::invalid_argument("malformed removal entry '" + token + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty removal vector");
    return out;
}

std::string format_removals(std::span<const int> removals) {
    std::string out;
    std::size_t i = 0;
    while (i < removals.size()) {
        std::size_t k = i;
        while (k < removals.size() && removals[k] == removals[i]) ++k;
        if (!out.empty()) out += ',';
        out += std::to_string(removals[i]);
        if (k - i > 1) out += '*' + std::to_string(k - i);
        i = k;
    }
    return out;
}

}  // namespace gumbel2
