#pragma once

#include <span>

namespace gumbel2 {

/// Daily Covid-19 death rates in India (90 values, percent), in recorded
/// order. Mirrors data/covid19_india_death_rate.txt.
std::span<const double> covid_death_rates();

}  // namespace gumbel2
