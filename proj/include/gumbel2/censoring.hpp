#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gumbel2/models.hpp"

namespace gumbel2 {

/// Adaptive type-II progressive hybrid censoring plan: n units on test, m
/// failures observed, threshold time T, planned removals R (one per failure).
struct CensoringPlan {
    int n = 0;
    int m = 0;
    double threshold = std::numeric_limits<double>::infinity();
    std::vector<int> removals;

    void validate() const;  // throws std::invalid_argument
};

/// Observed failure times with the adapted removal pattern.
///
/// change_point (j) counts observed failures at or before the threshold. When
/// j < m-1 the removals after the j-th failure are suspended and every
/// remaining survivor is withdrawn at the m-th failure.
struct AdaptiveCensoredSample {
    std::vector<double> times;
    int change_point = 0;
    std::vector<int> effective_removals;
    CensoringPlan plan;

    int m() const { return static_cast<int>(times.size()); }
    void validate() const;  // throws std::invalid_argument
};

/// Removal vectors for the three standard layouts:
///   1: (0, ..., 0, n-m)
///   2: (n-2m+1, 1, ..., 1)
///   3: (n-m-5, 0, ..., 0, 1, 1, 1, 1, 1)
std::vector<int> removal_scheme(int kind, int n, int m);

/// Effective removals for a plan given the change point j.
std::vector<int> effective_removals(const CensoringPlan& plan, int change_point);

/// Builds a sample from already-observed (sorted) times under a plan.
AdaptiveCensoredSample make_sample(std::vector<double> times, const CensoringPlan& plan);

/// Complete sample: every value observed, no removals, T = infinity.
AdaptiveCensoredSample make_complete_sample(std::vector<double> data);

/// Simulates the life test with n iid Gumbel type-II lifetimes.
AdaptiveCensoredSample generate_sample(const Params& p, const CensoringPlan& plan, std::uint64_t seed);

/// Applies the censoring mechanism to a fixed dataset of n lifetimes;
/// survivors to withdraw are chosen uniformly at random.
AdaptiveCensoredSample censor_real_data(std::span<const double> data, const CensoringPlan& plan,
                                        std::uint64_t seed);

/// Parses removal vectors such as "0*39,50" (value*count run-lengths).
std::vector<int> parse_removals(const std::string& text);

/// Compact run-length form of a removal vector, e.g. "0*39,50".
std::string format_removals(std::span<const int> removals);

}  // namespace gumbel2
