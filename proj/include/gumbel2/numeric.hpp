#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace gumbel2 {

/// Raised when an objective evaluates to a nonfinite value at a valid point.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// ln(1 - e^{-z}) for z > 0, accurate for both small and large z.
inline double log1mexp(double z) {
    return z < 0.6931471805599453 ? std::log(-std::expm1(-z)) : std::log1p(-std::exp(-z));
}

/// First derivative of log1mexp: e^{-z} / (1 - e^{-z}).
inline double log1mexp_d1(double z) { return 1.0 / std::expm1(z); }

/// Second derivative of log1mexp: -e^{z} / (e^{z} - 1)^2.
inline double log1mexp_d2(double z) { return -1.0 / (std::expm1(z) * -std::expm1(-z)); }

struct Matrix2 {
    double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

    double determinant() const { return a11 * a22 - a12 * a21; }
    Matrix2 inverse() const;  // throws std::domain_error when singular
    Matrix2 negated() const { return {-a11, -a12, -a21, -a22}; }
    bool is_symmetric(double tol = 0.0) const { return std::abs(a12 - a21) <= tol; }
    bool is_positive_definite() const { return a11 > 0.0 && determinant() > 0.0; }
};

/// Value, gradient and Hessian of a bivariate objective in (alpha, beta).
struct Evaluation {
    double value = 0.0;
    std::array<double, 2> gradient{0.0, 0.0};
    Matrix2 hessian;
};

/// Upper quantile of the standard normal: z such that P(Z > z) = tail.
double normal_upper_quantile(double tail);

double normal_cdf(double x);

// Seed derivation. A child seed is splitmix64(parent ^ mix(stream) ^ mix2(index)),
// so (master, stream, index) triples map to statistically independent streams
// and any replicate can be regenerated without replaying the ones before it.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream, std::uint64_t index = 0);

/// Uniform draw on the open interval (0, 1) from 53 random bits.
template <class Rng>
double open_uniform(Rng& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection; bound > 0.
template <class Rng>
std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 = hardware).
/// Each index is visited exactly once; callers write results by index.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// Formats with 10 significant digits (%.10g).
std::string format_number(double x);

/// Rounds to 10 significant digits so serialized output is stable.
double round_significant(double x);

}  // namespace gumbel2
