#include "hazardld/rate_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hazardld/extended_real.hpp"

namespace hazardld {

namespace {

constexpr std::int64_t series_term_cap = 1'000'000;
constexpr double series_stop_scale = 1e-15;

}  // namespace

double bernoulli_rate(probability p, double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("bernoulli_rate: x must lie in [0,1]");
    const double pv = p.value();
    if (x == 0.0) return -std::log1p(-pv);
    if (x == 1.0) return -std::log(pv);
    // log1p on the centered ratios keeps the minimum at x = p exact.
    const double a = x * std::log1p((x - pv) / pv);
    const double b = (1.0 - x) * std::log1p((pv - x) / (1.0 - pv));
    return std::max(0.0, a + b);
}

double ch_rate(probability p, double y) {
    if (!(y >= 0.0))
        throw std::domain_error("ch_rate: y must lie in [0, +inf]");
    const double pv = p.value();
    if (is_infinite(y)) return -std::log1p(-pv);  // exp(-y) = 0 boundary
    const double x = std::exp(-y);
    if (x == 1.0) return -std::log(pv);
    // x ln(x/p) evaluated as x(-y - ln p): uses y exactly instead of log(exp(-y)).
    const double a = x * (-y - std::log(pv));
    const double b = -std::expm1(-y) * std::log1p((pv - x) / (1.0 - pv));
    return std::max(0.0, a + b);
}

double centered_rate(probability p, double z) {
    const double pv = p.value();
    if (!(z >= std::log(pv)))
        throw std::domain_error("centered_rate: z must lie in [ln p, +inf]");
    if (is_infinite(z)) return -std::log1p(-pv);
    const double w = pv * std::exp(-z);            // = exp(-(z - ln p))
    const double p_minus_w = -pv * std::expm1(-z); // stable near z = 0
    const double one_minus_w = (1.0 - pv) + p_minus_w;
    // w reaches 1 only at z = ln p, where the (1-w) ln(1-w) term vanishes.
    if (one_minus_w <= 0.0) return -z * std::min(w, 1.0);
    const double b = one_minus_w * std::log1p(p_minus_w / (1.0 - pv));
    return std::max(0.0, -z * w + b);
}

double centered_rate_dp(probability p, double z) {
    const double pv = p.value();
    if (!(z >= std::log(pv)))
        throw std::domain_error("centered_rate_dp: z must lie in [ln p, +inf]");
    if (is_infinite(z)) return 1.0 / (1.0 - pv);
    const double ez = std::exp(-z);
    const double em = std::expm1(-z);
    const double p_minus_w = -pv * em;
    const double one_minus_w = (1.0 - pv) + p_minus_w;
    if (one_minus_w <= 0.0) return infinity;  // one-sided limit at z = ln p
    return -z * ez - em / (1.0 - pv) - ez * std::log1p(p_minus_w / (1.0 - pv));
}

double centered_rate_dp2(probability p, double z) {
    const double pv = p.value();
    if (!(z >= std::log(pv)))
        throw std::domain_error("centered_rate_dp2: z must lie in [ln p, +inf]");
    const double omp = 1.0 - pv;
    if (is_infinite(z)) return 1.0 / (omp * omp);
    const double em = std::expm1(-z);              // e^{-z} - 1
    const double one_minus_w = omp - pv * em;      // = 1 - p e^{-z}
    if (one_minus_w <= 0.0) return infinity;       // one-sided limit at z = ln p
    return (em * em) / (omp * omp * one_minus_w);
}

double centered_rate_dp_at_zero(double z) noexcept {
    return std::exp(-z) * (-z - 1.0) + 1.0;
}

namespace {

double series_prefix(double pv, double z) {
    // -z + ln((1-p)/e)
    return -z + std::log1p(-pv) - 1.0;
}

}  // namespace

double centered_rate_series(probability p, double z, std::int64_t last_term) {
    if (last_term < 1)
        throw std::domain_error("centered_rate_series: truncation index must be positive");
    const double pv = p.value();
    const double w = pv * std::exp(-z);
    if (!(w < 1.0))
        throw std::domain_error("centered_rate_series: requires p * exp(-z) < 1");
    double sum = 0.0;
    double wpow = w;  // w^{k-1}
    for (std::int64_t k = 2; k <= last_term; ++k) {
        sum += wpow / (static_cast<double>(k) * static_cast<double>(k - 1));
        wpow *= w;
    }
    return w * (series_prefix(pv, z) + sum) - std::log1p(-pv);
}

double centered_rate_series(probability p, double z) {
    const double pv = p.value();
    const double w = pv * std::exp(-z);
    if (!(w < 1.0))
        throw std::domain_error("centered_rate_series: requires p * exp(-z) < 1");
    double partial = series_prefix(pv, z);
    double wpow = w;
    for (std::int64_t k = 2; k <= series_term_cap; ++k) {
        const double term = wpow / (static_cast<double>(k) * static_cast<double>(k - 1));
        if (term < series_stop_scale * (1.0 + std::abs(partial))) break;
        partial += term;
        wpow *= w;
    }
    return w * partial - std::log1p(-pv);
}

double power_series_identity_residual(double x, std::int64_t last_term) {
    if (last_term < 1)
        throw std::domain_error("power_series_identity_residual: truncation index must be positive");
    if (!(std::abs(x) < 1.0))
        throw std::domain_error("power_series_identity_residual: requires |x| < 1");
    const double lhs = (1.0 - x) * std::log1p(-x);
    double rhs = -x;
    double xpow = x * x;  // x^k
    for (std::int64_t k = 2; k <= last_term; ++k) {
        rhs += xpow / (static_cast<double>(k) * static_cast<double>(k - 1));
        xpow *= x;
    }
    return lhs - rhs;
}

double symmetry_defect_exact(probability p, double z) {
    const double zmax = -std::log(p.value());
    if (!(z > 0.0 && z <= zmax))
        throw std::domain_error("symmetry_defect_exact: z must lie in (0, -ln p]");
    return std::abs(centered_rate(p, -z) - centered_rate(p, z));
}

double symmetry_defect_approx(probability p, double z) {
    const double pv = p.value();
    if (!(z > 0.0 && z < -std::log(pv)))
        throw std::domain_error("symmetry_defect_approx: z must lie in (0, -ln p)");
    const double c = std::log1p(-pv) - 1.0;  // ln((1-p)/e)
    return 2.0 * pv * (z * std::cosh(z) + std::sinh(z) * c) + pv * pv * std::sinh(2.0 * z);
}

rate_curve sample_rate_curve(probability p, std::vector<double> y_grid) {
    if (y_grid.empty())
        throw std::domain_error("rate_curve: value grid must be nonempty");
    if (!(y_grid.front() >= 0.0))
        throw std::domain_error("rate_curve: value grid must be nonnegative");
    for (std::size_t i = 0; i + 1 < y_grid.size(); ++i)
        if (!(y_grid[i] < y_grid[i + 1]))
            throw std::domain_error("rate_curve: value grid must be strictly increasing");
    rate_curve curve{p, std::move(y_grid), {}};
    curve.ordinates.reserve(curve.abscissas.size());
    for (double y : curve.abscissas) curve.ordinates.push_back(ch_rate(p, y));
    return curve;
}

}  // namespace hazardld
