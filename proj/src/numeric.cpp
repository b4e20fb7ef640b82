#include "gumbel2/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include <boost/math/distributions/normal.hpp>

namespace gumbel2 {

Matrix2 Matrix2::inverse() const {
    const double det = determinant();
    if (det == 0.0 || !std::isfinite(det)) {
        throw std::domain_error("singular 2x2 matrix");
    }
    return {a22 / det, -a12 / det, -a21 / det, a11 / det};
}

double normal_upper_quantile(double tail) {
    if (!(tail > 0.0 && tail < 1.0)) {
        throw std::domain_error("normal tail probability must lie in (0,1)");
    }
    return boost::math::quantile(boost::math::complement(boost::math::normal_distribution<>(), tail));
}

double normal_cdf(double x) { return boost::math::cdf(boost::math::normal_distribution<>(), x); }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream, std::uint64_t index) {
    return splitmix64(parent ^ splitmix64(stream + 0x632be59bd9b4e019ULL) ^
                      splitmix64(splitmix64(index) + 0x85157af5ULL));
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    workers.reserve(n);
    for (unsigned t = 0; t < n; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

double round_significant(double x) {
    if (!std::isfinite(x)) return x;
    return std::strtod(format_number(x).c_str(), nullptr);
}

}  // namespace gumbel2
