#include "hazardld/exact_law.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>

#include "hazardld/estimator.hpp"
#include "hazardld/extended_real.hpp"
#include "hazardld/rate_functions.hpp"
#include "hazardld/rng.hpp"

namespace hazardld {

namespace detail {

namespace {
std::mutex table_mutex;
std::shared_ptr<const std::vector<long double>> table_snapshot;
long double table_carry = 0.0L;  // Kahan carry, lets the cumulative sum resume
}  // namespace

std::shared_ptr<const std::vector<long double>> log_factorial_table(std::size_t upto) {
    std::scoped_lock lock(table_mutex);
    if (table_snapshot && table_snapshot->size() > upto) return table_snapshot;
    auto grown = std::make_shared<std::vector<long double>>();
    grown->reserve(upto + 1);
    if (table_snapshot)
        *grown = *table_snapshot;
    else
        grown->push_back(0.0L);  // ln 0! = 0
    long double sum = grown->back();
    long double carry = table_carry;
    for (std::size_t k = grown->size(); k <= upto; ++k) {
        const long double y = std::log(static_cast<long double>(k)) - carry;
        const long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        grown->push_back(sum);
    }
    table_carry = carry;
    table_snapshot = std::move(grown);
    return table_snapshot;
}

}  // namespace detail

namespace {

double law_value(std::int64_t k, std::int64_t n) noexcept {
    if (k == 0) return infinity;
    if (k == n) return 0.0;
    return -std::log(static_cast<double>(k) / static_cast<double>(n));
}

void check_law_size(std::int64_t n) {
    if (n < 1 || n > max_law_size)
        throw std::domain_error("ch_law: n must lie in [1, 1000000]");
}

struct law_weights {
    const long double* lf;
    long double log_p;
    long double log_q;
    std::int64_t n;

    double log_prob(std::int64_t k) const noexcept {
        return static_cast<double>(lf[n] - lf[k] - lf[n - k] +
                                   static_cast<long double>(k) * log_p +
                                   static_cast<long double>(n - k) * log_q);
    }
};

// Ascending-ordered, Kahan-compensated log-sum-exp; -inf for the empty set.
double log_sum_exp_sorted(std::vector<double>& lps) {
    if (lps.empty()) return -infinity;
    std::sort(lps.begin(), lps.end());
    const double m = lps.back();
    double sum = 0.0;
    double carry = 0.0;
    for (double lp : lps) {
        const double y = std::exp(lp - m) - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return m + std::log(sum);
}

std::string format_threshold(double v) {
    if (is_infinite(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

ch_law make_ch_law(std::int64_t n, probability p) {
    check_law_size(n);
    const auto table = detail::log_factorial_table(static_cast<std::size_t>(n));
    const law_weights w{table->data(), std::log(static_cast<long double>(p.value())),
                        std::log1p(static_cast<long double>(-p.value())), n};
    ch_law law{n, p, {}, {}};
    law.values.resize(static_cast<std::size_t>(n) + 1);
    law.log_probs.resize(static_cast<std::size_t>(n) + 1);
#pragma omp parallel for schedule(static) if (n >= 4096)
    for (std::int64_t k = 0; k <= n; ++k) {
        law.values[static_cast<std::size_t>(k)] = law_value(k, n);
        law.log_probs[static_cast<std::size_t>(k)] = w.log_prob(k);
    }
    return law;
}

ch_law make_ch_law_serial(std::int64_t n, probability p) {
    check_law_size(n);
    const auto table = detail::log_factorial_table(static_cast<std::size_t>(n));
    const law_weights w{table->data(), std::log(static_cast<long double>(p.value())),
                        std::log1p(static_cast<long double>(-p.value())), n};
    ch_law law{n, p, {}, {}};
    law.values.resize(static_cast<std::size_t>(n) + 1);
    law.log_probs.resize(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
        law.values[static_cast<std::size_t>(k)] = law_value(k, n);
        law.log_probs[static_cast<std::size_t>(k)] = w.log_prob(k);
    }
    return law;
}

deviation_event deviation_event::at_least(double y) {
    if (std::isnan(y)) throw std::domain_error("deviation_event: threshold must not be NaN");
    return {kind_t::at_least, y, infinity};
}

deviation_event deviation_event::at_most(double y) {
    if (std::isnan(y)) throw std::domain_error("deviation_event: threshold must not be NaN");
    return {kind_t::at_most, -infinity, y};
}

deviation_event deviation_event::outside(double lo, double hi) {
    if (!(lo < hi)) throw std::domain_error("deviation_event: outside requires lo < hi");
    return {kind_t::outside, lo, hi};
}

bool deviation_event::contains(double value) const noexcept {
    switch (kind_) {
        case kind_t::at_least:
            return value >= lo_;
        case kind_t::at_most:
            return value <= hi_;
        case kind_t::outside:
            return value <= lo_ || value >= hi_;
    }
    return false;
}

std::string deviation_event::describe() const {
    switch (kind_) {
        case kind_t::at_least:
            return "at-least " + format_threshold(lo_);
        case kind_t::at_most:
            return "at-most " + format_threshold(hi_);
        case kind_t::outside:
            return "outside (" + format_threshold(lo_) + ", " + format_threshold(hi_) + ")";
    }
    return {};
}

event_probability_result event_probability(const ch_law& law, const deviation_event& event) {
    std::vector<double> member_lps;
    member_lps.reserve(law.values.size());
    for (std::size_t k = 0; k < law.values.size(); ++k)
        if (event.contains(law.values[k])) member_lps.push_back(law.log_probs[k]);
    double log_prob = log_sum_exp_sorted(member_lps);
    if (log_prob > 0.0) log_prob = 0.0;
    return {std::exp(log_prob), log_prob};
}

double event_rate_infimum(probability p, const deviation_event& event) {
    const double minimizer = -std::log(p.value());
    if (event.contains(minimizer))
        throw std::domain_error("event contains the rate minimizer -ln p, limit rate would be 0");
    double inf_rate = infinity;
    switch (event.kind()) {
        case deviation_event::kind_t::at_least:
            inf_rate = ch_rate(p, event.lower());
            break;
        case deviation_event::kind_t::at_most:
            if (event.upper() >= 0.0) inf_rate = ch_rate(p, event.upper());
            break;
        case deviation_event::kind_t::outside: {
            if (event.lower() >= 0.0) inf_rate = ch_rate(p, event.lower());
            inf_rate = std::min(inf_rate, ch_rate(p, std::max(event.upper(), 0.0)));
            break;
        }
    }
    if (is_infinite(inf_rate) && event.kind() == deviation_event::kind_t::at_most)
        throw std::domain_error("event does not intersect [0, +inf]");
    return inf_rate;
}

std::vector<ldp_check_row> ldp_convergence(probability p, const deviation_event& event,
                                           const std::vector<std::int64_t>& n_list) {
    if (n_list.empty())
        throw std::domain_error("ldp_convergence: n list must be nonempty");
    const double limit = event_rate_infimum(p, event);
    std::vector<ldp_check_row> rows;
    rows.reserve(n_list.size());
    for (std::int64_t n : n_list) {
        const ch_law law = make_ch_law(n, p);
        const auto ep = event_probability(law, event);
        const double empirical = -ep.log_prob / static_cast<double>(n);
        rows.push_back({n, ep.log_prob, empirical, limit, empirical - limit});
    }
    return rows;
}

over_under_report over_under(std::int64_t n, probability p, double delta) {
    const double true_ch = -std::log(p.value());
    if (!(delta > 0.0 && delta < true_ch))
        throw std::domain_error("over_under: delta must lie in (0, -ln p)");
    const ch_law law = make_ch_law(n, p);
    const auto over = event_probability(law, deviation_event::at_least(true_ch + delta));
    const auto under = event_probability(law, deviation_event::at_most(true_ch - delta));
    over_under_report r;
    r.n = n;
    r.p = p.value();
    r.delta = delta;
    r.prob_over = over.prob;
    r.prob_under = under.prob;
    r.log_prob_over = over.log_prob;
    r.log_prob_under = under.log_prob;
    r.log_ratio_rate = (over.log_prob - under.log_prob) / static_cast<double>(n);
    r.limit = centered_rate(p, -delta) - centered_rate(p, delta);
    return r;
}

chernoff_bounds chernoff_check(std::int64_t n, probability p, double x) {
    if (!(x > p.value() && x <= 1.0))
        throw std::domain_error("chernoff_check: x must lie in (p, 1]");
    const ch_law law = make_ch_law(n, p);
    // First atom of {mean >= x}: n x rounded up, with slack for grid arithmetic.
    auto m = static_cast<std::int64_t>(std::ceil(x * static_cast<double>(n) - 1e-9));
    m = std::clamp<std::int64_t>(m, 1, n);
    std::vector<double> tail(law.log_probs.begin() + m, law.log_probs.end());
    const double exact = std::min(log_sum_exp_sorted(tail), 0.0);
    return {exact, -static_cast<double>(n) * bernoulli_rate(p, x)};
}

namespace {

bool trial_hits_event(const distribution& model, double threshold, std::int64_t n,
                      const deviation_event& event, std::uint64_t stream) {
    std::int64_t successes = 0;
    for (std::int64_t i = 0; i < n; ++i)
        if (model.quantile(rng::uniform01(stream, static_cast<std::uint64_t>(i))) > threshold)
            ++successes;
    return event.contains(empirical_cumhaz(successes, n));
}

void check_monte_carlo_args(double threshold, std::int64_t n, std::int64_t trials) {
    if (!(threshold > 0.0))
        throw std::domain_error("monte_carlo_event_freq: threshold must be positive");
    if (n < 1)
        throw std::domain_error("monte_carlo_event_freq: n must be at least 1");
    if (trials < 1)
        throw std::domain_error("monte_carlo_event_freq: trials must be at least 1");
}

}  // namespace

double monte_carlo_event_freq(const distribution& model, double threshold, std::int64_t n,
                              const deviation_event& event, std::int64_t trials,
                              std::uint64_t seed) {
    check_monte_carlo_args(threshold, n, trials);
    std::int64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits) if (trials >= 256)
    for (std::int64_t t = 0; t < trials; ++t)
        if (trial_hits_event(model, threshold, n, event,
                             rng::substream(seed, static_cast<std::uint64_t>(t))))
            ++hits;
    return static_cast<double>(hits) / static_cast<double>(trials);
}

double monte_carlo_event_freq_serial(const distribution& model, double threshold, std::int64_t n,
                                     const deviation_event& event, std::int64_t trials,
                                     std::uint64_t seed) {
    check_monte_carlo_args(threshold, n, trials);
    std::int64_t hits = 0;
    for (std::int64_t t = 0; t < trials; ++t)
        if (trial_hits_event(model, threshold, n, event,
                             rng::substream(seed, static_cast<std::uint64_t>(t))))
            ++hits;
    return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace hazardld
