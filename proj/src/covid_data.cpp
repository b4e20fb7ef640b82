#include "gumbel2/covid_data.hpp"

#include <array>

namespace gumbel2 {

namespace {

constexpr std::array<double, 90> kRates{
    13.33, 17.65, 17.65, 16.67, 17.86, 17.86, 22.58, 22.73, 20, 21.82, 30.77, 21.51, 22.22, 22.13,
    23.88, 22.15, 28.16, 27.38, 30.94, 30.18, 26.46, 26.16, 25.48, 26.02, 26.33, 24.34, 22.91,
    23.46, 23.26, 22.43, 21.87, 20.22, 19.23, 17.46, 16.38, 15.32, 13.96, 13.48, 12.58, 12.43,
    12.20, 11.90, 11.63, 11.51, 11.34, 11.29, 10.89, 10.90, 10.57, 10.87, 10.69, 10.43, 10.12,
    9.99, 9.82, 9.54, 9.23, 9, 8.81, 8.65, 8.34, 7.74, 7.60, 7.45, 7.24, 7.03, 6.87, 6.71, 6.64,
    6.52, 6.43, 6.33, 6.27, 6.23, 5.68, 5.63, 5.56, 5.53, 5.49, 5.53, 5.54, 5.55, 5.53, 5.50, 5.47,
    5.44, 5.44, 5.47, 5.45, 5.36
};

}  // namespace

std::span<const double> covid_death_rates() { return kRates; }

}  // namespace gumbel2
