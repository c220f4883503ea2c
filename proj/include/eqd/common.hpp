#ifndef EQD_COMMON_HPP
#define EQD_COMMON_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqd {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Pairwise (cascade) summation: deterministic and O(eps log n) accurate.
template <class T>
T pairwise_sum(std::span<const T> xs) {
    if (xs.empty()) return T{};
    if (xs.size() <= 8) {
        T s{};
        for (const T& x : xs) s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

template <class T>
T pairwise_sum(const std::vector<T>& xs) {
    return pairwise_sum(std::span<const T>(xs));
}

// Wrapped representative distance on R/Z, in [0, 1/2].
inline double wrap_distance(double a, double b) {
    double d = std::fabs(a - b);
    d -= std::floor(d);
    return d > 0.5 ? 1.0 - d : d;
}

// Distance between angles as used by the metric d of the ambient torus:
// Euclidean distance in S^1 between e^{2pi i a}, e^{2pi i b}, divided by 2pi.
inline double angular_distance(double a, double b) {
    return std::fabs(std::sin(std::numbers::pi * (a - b))) / std::numbers::pi;
}

// FNV-1a 64-bit, used for input digests in reports.
inline std::uint64_t fnv1a(std::span<const unsigned char> bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

inline constexpr const char* kToolName = "equidist";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace eqd

#endif
