#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hazardld/distribution.hpp"
#include "hazardld/extended_real.hpp"

namespace hazardld {

/// A batch of observed waiting times (all strictly positive). `seed` is set
/// when the batch was generated by sample(), absent for user-supplied data.
struct sample_batch {
    std::vector<double> values;
    std::optional<std::uint64_t> seed;
};

/// Count of observations strictly above a threshold. Ties at the threshold
/// count as not exceeding; real data can produce ties even though a
/// continuous model gives them probability zero.
struct threshold_summary {
    double threshold = 0.0;
    std::int64_t n = 0;
    std::int64_t successes = 0;
};

[[nodiscard]] threshold_summary summarize(const sample_batch& batch, double threshold);

[[nodiscard]] inline double empirical_survival(const threshold_summary& s) noexcept {
    return static_cast<double>(s.successes) / static_cast<double>(s.n);
}

/// -ln(successes/n); +inf when no observation exceeds the threshold. The
/// infinite case is a value with probability (1-p)^n, not an error.
[[nodiscard]] inline double empirical_cumhaz(std::int64_t successes, std::int64_t n) noexcept {
    const double v = -log_extended(static_cast<double>(successes) / static_cast<double>(n));
    return v == 0.0 ? 0.0 : v;  // normalize -0
}

[[nodiscard]] inline double empirical_cumhaz(const threshold_summary& s) noexcept {
    return empirical_cumhaz(s.successes, s.n);
}

/// n inverse-CDF draws from the model under a counter-based stream: the draw
/// at index i uses rng::uniform01(seed, i), so identical (model, n, seed)
/// reproduce the batch bit-for-bit.
[[nodiscard]] sample_batch sample(const distribution& model, std::int64_t n, std::uint64_t seed);

/// Single-column CSV with header "waiting_time", one positive decimal per
/// row. Parse failures report the offending line number.
[[nodiscard]] sample_batch read_waiting_times(const std::string& path);

}  // namespace hazardld
