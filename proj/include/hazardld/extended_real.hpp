#pragma once

#include <cmath>
#include <limits>

namespace hazardld {

// Hazard and rate values live on [0, +inf]; IEEE +infinity is the point at
// infinity. Boundary conventions used throughout: ln(0) = -inf, 0 ln 0 = 0,
// exp(-inf) = 0. The branches below implement them explicitly instead of
// leaning on 0 * inf = NaN arithmetic.
inline constexpr double infinity = std::numeric_limits<double>::infinity();

[[nodiscard]] inline bool is_infinite(double x) noexcept { return std::isinf(x); }

// ln with ln(0) = -inf.
[[nodiscard]] inline double log_extended(double x) {
    return x == 0.0 ? -infinity : std::log(x);
}

// x ln x with 0 ln 0 = 0.
[[nodiscard]] inline double xlogx(double x) {
    return x == 0.0 ? 0.0 : x * std::log(x);
}

}  // namespace hazardld
