#pragma once

#include <string>
#include <vector>

namespace hazardld {

/// Survival model for positive waiting times. Three families: exponential,
/// Weibull, and a step function built from an observed sample. Continuous
/// families satisfy S(0) = 1 and S(t) + F(t) = 1; the empirical family counts
/// strictly greater values, so S(t) can reach 0 (where the cumulative hazard
/// is +inf) and such points are rejected wherever an interior tail
/// probability is required.
class distribution {
  public:
    enum class family_kind { exponential, weibull, empirical_step };

    static distribution exponential(double rate);
    static distribution weibull(double shape, double scale);
    static distribution empirical_step(std::vector<double> values);

    /// P(X > t) for t >= 0.
    [[nodiscard]] double survival(double t) const;
    /// P(X <= t) for t >= 0.
    [[nodiscard]] double cdf(double t) const;
    /// -ln S(t); +inf where S(t) = 0.
    [[nodiscard]] double cumhaz(double t) const;
    /// inf{ t : F(t) >= u } for u in (0,1).
    [[nodiscard]] double quantile(double u) const;

    [[nodiscard]] family_kind family() const noexcept { return kind_; }
    [[nodiscard]] std::string describe() const;

  private:
    distribution(family_kind kind, double a, double b, std::vector<double> values);

    family_kind kind_;
    double a_ = 0.0;  // exponential: rate; weibull: shape
    double b_ = 0.0;  // weibull: scale
    std::vector<double> values_;  // empirical_step: sorted sample
};

}  // namespace hazardld
