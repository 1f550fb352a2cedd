#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hazardld/distribution.hpp"
#include "hazardld/probability.hpp"

namespace hazardld {

/// Exact finite-sample law of the empirical cumulative hazard at a fixed
/// threshold with tail probability p: atoms at -ln(k/n) for k = 0..n (k = 0
/// gives the +inf atom, which occurs with probability (1-p)^n) carrying
/// binomial log-weights ln C(n,k) + k ln p + (n-k) ln(1-p). Values are
/// strictly decreasing in k; the log-weights sum to 0 under log-sum-exp.
struct ch_law {
    std::int64_t n = 0;
    probability p;
    std::vector<double> values;     // values[k] = -ln(k/n)
    std::vector<double> log_probs;  // log_probs[k]
};

inline constexpr std::int64_t max_law_size = 1'000'000;

[[nodiscard]] ch_law make_ch_law(std::int64_t n, probability p);
/// Reference single-threaded construction; bit-identical to make_ch_law.
[[nodiscard]] ch_law make_ch_law_serial(std::int64_t n, probability p);

/// One- or two-sided interval event on the value of the empirical cumulative
/// hazard. Membership uses plain >= / <= comparisons, so the +inf atom
/// belongs to every at_least event.
class deviation_event {
  public:
    enum class kind_t { at_least, at_most, outside };

    static deviation_event at_least(double y);
    static deviation_event at_most(double y);
    static deviation_event outside(double lo, double hi);  // requires lo < hi

    [[nodiscard]] kind_t kind() const noexcept { return kind_; }
    [[nodiscard]] double lower() const noexcept { return lo_; }
    [[nodiscard]] double upper() const noexcept { return hi_; }
    [[nodiscard]] bool contains(double value) const noexcept;
    [[nodiscard]] std::string describe() const;

  private:
    deviation_event(kind_t kind, double lo, double hi) : kind_(kind), lo_(lo), hi_(hi) {}

    kind_t kind_;
    double lo_;
    double hi_;
};

struct event_probability_result {
    double prob = 0.0;      // may underflow to 0; log_prob stays usable
    double log_prob = 0.0;  // -inf for the empty event
};

/// Exact event probability: log-weights of member atoms are accumulated in
/// log space, ordered ascending, with compensated summation.
[[nodiscard]] event_probability_result event_probability(const ch_law& law,
                                                         const deviation_event& event);

/// Infimum of ch_rate(p, .) over the event, located by unimodality (the rate
/// decreases on [0, -ln p] and increases beyond). Throws if the event
/// contains the minimizer -ln p (limit rate zero) or misses [0, +inf]
/// entirely.
[[nodiscard]] double event_rate_infimum(probability p, const deviation_event& event);

struct ldp_check_row {
    std::int64_t n = 0;
    double exact_log_prob = 0.0;
    double empirical_rate = 0.0;  // -(1/n) ln P_n(event)
    double limit_rate = 0.0;      // inf of ch_rate over the event
    double gap = 0.0;             // empirical_rate - limit_rate
};

/// Exact decay-rate table for the event probability across sample sizes.
[[nodiscard]] std::vector<ldp_check_row> ldp_convergence(probability p,
                                                         const deviation_event& event,
                                                         const std::vector<std::int64_t>& n_list);

/// Exact probabilities of overshooting / undershooting the true cumulative
/// hazard -ln p by delta, with the asymptotic log-ratio they converge to.
struct over_under_report {
    std::int64_t n = 0;
    double p = 0.0;
    double delta = 0.0;
    double prob_over = 0.0;        // P(H_n >= -ln p + delta)
    double prob_under = 0.0;       // P(H_n <= -ln p - delta)
    double log_prob_over = 0.0;
    double log_prob_under = 0.0;
    double log_ratio_rate = 0.0;   // (1/n) ln(prob_over / prob_under)
    double limit = 0.0;            // centered_rate(p,-delta) - centered_rate(p,delta)
};

[[nodiscard]] over_under_report over_under(std::int64_t n, probability p, double delta);

struct chernoff_bounds {
    double exact_log_prob = 0.0;  // ln P(mean of successes >= x), exact
    double bound_log = 0.0;       // -n * bernoulli_rate(p, x)
};

/// Exact upper tail of the success mean against its exponential bound; when
/// n x is an integer the exact value also obeys the single-atom lower bound
/// bound_log - ln(n+1).
[[nodiscard]] chernoff_bounds chernoff_check(std::int64_t n, probability p, double x);

/// Fraction of `trials` independent generated batches whose empirical
/// cumulative hazard at the threshold lies in the event; deterministic given
/// the seed (trial t draws from rng::substream(seed, t)).
[[nodiscard]] double monte_carlo_event_freq(const distribution& model, double threshold,
                                            std::int64_t n, const deviation_event& event,
                                            std::int64_t trials, std::uint64_t seed);
[[nodiscard]] double monte_carlo_event_freq_serial(const distribution& model, double threshold,
                                                   std::int64_t n, const deviation_event& event,
                                                   std::int64_t trials, std::uint64_t seed);

namespace detail {
/// Shared cumulative table of ln k!, built once per process by summation of
/// ln k and grown on demand; snapshots are immutable once returned.
[[nodiscard]] std::shared_ptr<const std::vector<long double>> log_factorial_table(
    std::size_t upto);
}  // namespace detail

}  // namespace hazardld
