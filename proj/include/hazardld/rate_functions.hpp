#pragma once

#include <cstdint>
#include <vector>

#include "hazardld/probability.hpp"

namespace hazardld {

/// Relative entropy of Bernoulli(x) against Bernoulli(p):
///   x ln(x/p) + (1-x) ln((1-x)/(1-p)),  0 ln 0 = 0.
/// Defined for x in [0,1]; nonnegative, zero exactly at x = p.
[[nodiscard]] double bernoulli_rate(probability p, double x);

/// Large-deviation rate of the empirical cumulative hazard at tail
/// probability p, i.e. bernoulli_rate(p, exp(-y)) for y in [0, +inf].
/// The value at y = +inf is the finite -ln(1-p); the unique zero is at
/// y = -ln p.
[[nodiscard]] double ch_rate(probability p, double y);

/// ch_rate with its zero shifted to the origin: ch_rate(p, z - ln p) for
/// z in [ln p, +inf]. Vanishes at z = 0 for every p.
[[nodiscard]] double centered_rate(probability p, double z);

/// d/dp of centered_rate at fixed z (one-sided +inf limit at z = ln p).
[[nodiscard]] double centered_rate_dp(probability p, double z);

/// d^2/dp^2 of centered_rate at fixed z. Strictly positive for z != 0,
/// exactly zero at z = 0, +inf one-sided limit at z = ln p.
[[nodiscard]] double centered_rate_dp2(probability p, double z);

/// d/dp of centered_rate evaluated at p = 0: exp(-z)(-z-1) + 1.
/// Strictly positive for finite z != 0, zero at z = 0.
[[nodiscard]] double centered_rate_dp_at_zero(double z) noexcept;

/// Power-series form of centered_rate,
///   p e^{-z} [ -z + ln((1-p)/e) + sum_{k=2..K} (p e^{-z})^{k-1}/(k^2-k) ] - ln(1-p),
/// valid for p exp(-z) < 1. `last_term` is the final index K of the sum.
[[nodiscard]] double centered_rate_series(probability p, double z, std::int64_t last_term);

/// Adaptive-truncation overload: stops once the next term drops below
/// 1e-15 * (1 + |partial sum|), capped at 1e6 terms.
[[nodiscard]] double centered_rate_series(probability p, double z);

/// Residual of the identity (1-x) ln(1-x) = -x + sum_{k>=2} x^k/(k^2-k)
/// truncated at k = `last_term`, for |x| < 1. Tends to 0 as the truncation
/// grows, bounded by the tail of the dropped terms.
[[nodiscard]] double power_series_identity_residual(double x, std::int64_t last_term);

/// |centered_rate(p,-z) - centered_rate(p,z)| for z in (0, -ln p], from the
/// closed forms. Strictly positive on the open interval.
[[nodiscard]] double symmetry_defect_exact(probability p, double z);

/// Second-order approximation of the defect for z in (0, -ln p):
///   2p ( z cosh z + sinh z ln((1-p)/e) ) + p^2 sinh(2z).
/// Error is dominated by the dropped terms 2 p^k sinh(kz)/(k^2-k), k >= 3.
[[nodiscard]] double symmetry_defect_approx(probability p, double z);

/// Sampled graph of ch_rate for one tail probability: strictly increasing
/// abscissas, nonnegative ordinates, and a single zero ordinate whenever the
/// minimizer -ln p is one of the abscissas.
struct rate_curve {
    probability parameter;
    std::vector<double> abscissas;  // y values, may end with +inf
    std::vector<double> ordinates;  // ch_rate(parameter, y)
};

[[nodiscard]] rate_curve sample_rate_curve(probability p, std::vector<double> y_grid);

}  // namespace hazardld
