#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hazardld/estimator.hpp"
#include "hazardld/exact_law.hpp"
#include "hazardld/extended_real.hpp"
#include "hazardld/rate_functions.hpp"
#include "hazardld/rng.hpp"
#include "reference_oracles.hpp"

using namespace hazardld;

namespace frozen {
constexpr double inf_atom_mass_10 = 0.010185894032016961;  // (1 - e^-1)^10
constexpr double at_least_2_n10 = 0.069465424684748525;    // P(H_10 >= 2), p = e^-1
constexpr double ch_einv_2 = 0.13553104507415220;          // limit rate of that event
constexpr double gap_4096 = 0.0010083609;                  // gap at n = 4096
}  // namespace frozen

TEST_CASE("single Bernoulli law") {
    const auto law = make_ch_law(1, probability(0.3));
    REQUIRE(law.values.size() == 2);
    CHECK(is_infinite(law.values[0]));
    CHECK(law.values[1] == 0.0);
    CHECK(law.log_probs[0] == doctest::Approx(std::log(0.7)).epsilon(1e-15));
    CHECK(law.log_probs[1] == doctest::Approx(std::log(0.3)).epsilon(1e-15));
}

TEST_CASE("fair coin law of two tosses") {
    const auto law = make_ch_law(2, probability(0.5));
    REQUIRE(law.values.size() == 3);
    CHECK(is_infinite(law.values[0]));
    CHECK(law.values[1] == doctest::Approx(0.69314718055994531).epsilon(1e-15));
    CHECK(law.values[2] == 0.0);
    CHECK(std::exp(law.log_probs[0]) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(std::exp(law.log_probs[1]) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::exp(law.log_probs[2]) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("law values decrease strictly and the infinite atom has mass (1-p)^n") {
    const auto law = make_ch_law(10, probability(std::exp(-1.0)));
    for (std::size_t k = 0; k + 1 < law.values.size(); ++k)
        CHECK(law.values[k] > law.values[k + 1]);
    CHECK(std::exp(law.log_probs[0]) ==
          doctest::Approx(frozen::inf_atom_mass_10).epsilon(1e-13));
    CHECK_THROWS_AS(make_ch_law(0, probability(0.5)), std::domain_error);
    CHECK_THROWS_AS(make_ch_law(max_law_size + 1, probability(0.5)), std::domain_error);
}

TEST_CASE("law weights match the brute-force recurrence") {
    for (std::int64_t n : {7, 64, 500}) {
        for (double pv : {0.3, std::exp(-1.0), 0.7}) {
            const auto law = make_ch_law(n, probability(pv));
            for (std::int64_t k = 0; k <= n; ++k) {
                const long double pmf = reference::binom_pmf(n, k, static_cast<long double>(pv));
                if (pmf < 1e-290L) continue;
                const auto got = static_cast<long double>(std::exp(law.log_probs[k]));
                CHECK(std::abs(static_cast<double>(got / pmf - 1.0L)) <= 1e-11);
            }
        }
    }
}

TEST_CASE("law normalizes to one across sizes and tail probabilities") {
    const auto everything = deviation_event::at_least(0.0);
    for (std::int64_t n : {1, 2, 3, 7, 10, 50, 137, 500, 1000, 2000}) {
        for (double pv : {0.05, 0.3, std::exp(-1.0), 0.5, 0.7, 0.95}) {
            const auto law = make_ch_law(n, probability(pv));
            const auto total = event_probability(law, everything);
            CHECK(std::abs(total.prob - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("law construction parallel and serial agree bit for bit") {
    for (std::int64_t n : {3, 4097, 20000}) {
        const auto a = make_ch_law(n, probability(0.37));
        const auto b = make_ch_law_serial(n, probability(0.37));
        CHECK(a.values == b.values);
        CHECK(a.log_probs == b.log_probs);
    }
}

TEST_CASE("the size cap is usable") {
    const auto law = make_ch_law(max_law_size, probability(0.5));
    CHECK(law.values.size() == static_cast<std::size_t>(max_law_size) + 1);
    const auto total = event_probability(law, deviation_event::at_least(0.0));
    CHECK(std::abs(total.prob - 1.0) <= 1e-12);
}

TEST_CASE("event probabilities: references, full space, empty set") {
    const auto law = make_ch_law(10, probability(std::exp(-1.0)));
    const auto tail = event_probability(law, deviation_event::at_least(2.0));
    CHECK(tail.prob == doctest::Approx(frozen::at_least_2_n10).epsilon(1e-13));
    CHECK(tail.log_prob == doctest::Approx(std::log(frozen::at_least_2_n10)).epsilon(1e-13));

    const auto all = event_probability(law, deviation_event::at_least(0.0));
    CHECK(all.prob == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(all.log_prob <= 0.0);

    const auto none = event_probability(law, deviation_event::at_most(-1.0));
    CHECK(none.prob == 0.0);
    CHECK(none.log_prob == -infinity);

    // only the +inf atom
    const auto top = event_probability(law, deviation_event::at_least(infinity));
    CHECK(top.log_prob == doctest::Approx(law.log_probs[0]).epsilon(1e-15));
    // only the zero atom
    const auto bottom = event_probability(law, deviation_event::at_most(0.0));
    CHECK(bottom.log_prob == doctest::Approx(law.log_probs[10]).epsilon(1e-15));
}

TEST_CASE("two-sided events sum both tails") {
    const std::int64_t n = 10;
    const long double p = std::exp(-1.0L);
    const auto law = make_ch_law(n, probability(std::exp(-1.0)));
    const auto ev = deviation_event::outside(0.5, 2.0);
    // value <= 0.5 means k >= 10 e^{-1/2} = 6.07, value >= 2 means k <= 1.35
    const long double expected =
        reference::binom_tail_ge(n, 7, p) + reference::binom_tail_le(n, 1, p);
    const auto got = event_probability(law, ev);
    CHECK(got.prob == doctest::Approx(static_cast<double>(expected)).epsilon(1e-13));
    CHECK_THROWS_AS(deviation_event::outside(2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(deviation_event::outside(2.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(deviation_event::at_least(std::nan("")), std::domain_error);
}

TEST_CASE("complementary one-sided events cover the law: random sweep") {
    for (int i = 0; i < 60; ++i) {
        const std::int64_t n = 1 + static_cast<std::int64_t>(120 * rng::uniform01(31, 3 * i));
        const double pv = 0.05 + 0.9 * rng::uniform01(31, 3 * i + 1);
        // y strictly between atoms, so the two events partition the support
        const double y = 1e-3 + 3.0 * rng::uniform01(31, 3 * i + 2);
        const auto law = make_ch_law(n, probability(pv));
        bool on_atom = false;
        for (double v : law.values)
            if (v == y) on_atom = true;
        if (on_atom) continue;
        const double above = event_probability(law, deviation_event::at_least(y)).prob;
        const double below = event_probability(law, deviation_event::at_most(y)).prob;
        CHECK(std::abs(above + below - 1.0) <= 1e-12);
    }
}

TEST_CASE("event rate infimum sits at the endpoint nearest the minimizer") {
    const probability p(std::exp(-1.0));
    CHECK(event_rate_infimum(p, deviation_event::at_least(2.0)) == ch_rate(p, 2.0));
    CHECK(event_rate_infimum(p, deviation_event::at_most(0.5)) == ch_rate(p, 0.5));
    CHECK(event_rate_infimum(p, deviation_event::outside(0.5, 2.0)) ==
          std::min(ch_rate(p, 0.5), ch_rate(p, 2.0)));
    CHECK(event_rate_infimum(p, deviation_event::at_least(infinity)) ==
          doctest::Approx(-std::log1p(-std::exp(-1.0))).epsilon(1e-15));
    // a lower arm below 0 contributes nothing; the upper arm decides
    CHECK(event_rate_infimum(p, deviation_event::outside(-1.0, 2.0)) == ch_rate(p, 2.0));
    // events touching the minimizer are rejected
    CHECK_THROWS_AS(event_rate_infimum(p, deviation_event::at_least(0.5)), std::domain_error);
    CHECK_THROWS_AS(event_rate_infimum(p, deviation_event::at_least(1.0)), std::domain_error);
    CHECK_THROWS_AS(event_rate_infimum(probability(0.5), deviation_event::at_most(std::log(2.0))),
                    std::domain_error);
    CHECK_THROWS_AS(event_rate_infimum(p, deviation_event::outside(1.5, 3.0)), std::domain_error);
    // empty intersection with [0, +inf]
    CHECK_THROWS_AS(event_rate_infimum(p, deviation_event::at_most(-1.0)), std::domain_error);
}

TEST_CASE("decay rates converge from above at the sandwich speed") {
    const probability p(std::exp(-1.0));
    const auto rows = ldp_convergence(p, deviation_event::at_least(2.0),
                                      {16, 64, 256, 1024, 4096});
    REQUIRE(rows.size() == 5);
    double prev_gap = infinity;
    for (const auto& r : rows) {
        CHECK(r.limit_rate == doctest::Approx(frozen::ch_einv_2).epsilon(1e-14));
        // exact log-probability against the brute-force oracle
        const auto K = static_cast<std::int64_t>(
            std::floor(static_cast<double>(r.n) * std::exp(-2.0)));
        const long double oracle =
            reference::binom_tail_le(r.n, K, std::exp(-1.0L));
        CHECK(r.exact_log_prob ==
              doctest::Approx(static_cast<double>(std::log(oracle))).epsilon(1e-12));
        CHECK(r.gap > 0.0);
        CHECK(r.gap <= std::log(static_cast<double>(r.n) + 1.0) / static_cast<double>(r.n));
        CHECK(r.gap < prev_gap);
        prev_gap = r.gap;
    }
    CHECK(rows.back().gap == doctest::Approx(frozen::gap_4096).epsilon(1e-6));
    CHECK_THROWS_AS(
        ldp_convergence(probability(0.5), deviation_event::at_most(std::log(2.0)), {16}),
        std::domain_error);
    CHECK_THROWS_AS(ldp_convergence(p, deviation_event::at_least(2.0), {}), std::domain_error);
}

TEST_CASE("overshooting beats undershooting at equal margins") {
    const probability p(std::exp(-1.0));
    const auto r = over_under(100, p, 0.5);
    CHECK(r.prob_over > r.prob_under);
    // exact probabilities against the brute-force oracle
    const long double pl = std::exp(-1.0L);
    const long double over = reference::binom_tail_le(100, 22, pl);   // k <= 100 e^{-3/2}
    const long double under = reference::binom_tail_ge(100, 61, pl);  // k >= 100 e^{-1/2}
    CHECK(r.prob_over == doctest::Approx(static_cast<double>(over)).epsilon(1e-12));
    CHECK(r.prob_under == doctest::Approx(static_cast<double>(under)).epsilon(1e-12));
    CHECK(r.limit == centered_rate(p, -0.5) - centered_rate(p, 0.5));
    CHECK(r.limit > 0.0);

    const auto far = over_under(1000, p, 0.5);
    CHECK(std::abs(far.log_ratio_rate - far.limit) <= 0.05);

    // degenerate margin stays well defined
    const auto tiny = over_under(50, p, 1e-9);
    CHECK(tiny.prob_over > 0.0);
    CHECK(tiny.prob_over <= 1.0);
    CHECK(tiny.prob_under > 0.0);
    CHECK(tiny.prob_under <= 1.0);

    CHECK_THROWS_AS(over_under(100, p, 0.0), std::domain_error);
    CHECK_THROWS_AS(over_under(100, p, -std::log(p.value())), std::domain_error);  // delta = -ln p
    CHECK_THROWS_AS(over_under(100, p, -0.5), std::domain_error);
}

TEST_CASE("chernoff bound sandwiches the exact tail") {
    const probability p(0.3);
    {
        const auto [exact, bound] = chernoff_check(20, p, 0.5);
        CHECK(exact <= bound);
        CHECK(exact >= bound - std::log(21.0));
        const long double oracle = reference::binom_tail_ge(20, 10, 0.3L);
        CHECK(exact == doctest::Approx(static_cast<double>(std::log(oracle))).epsilon(1e-12));
    }
    {
        // all-successes corner: both sides collapse to n ln p
        const auto [exact, bound] = chernoff_check(20, p, 1.0);
        CHECK(exact == doctest::Approx(20.0 * std::log(0.3)).epsilon(1e-13));
        CHECK(bound == doctest::Approx(20.0 * std::log(0.3)).epsilon(1e-13));
    }
    {
        const auto [exact, bound] = chernoff_check(50, p, 0.5);
        CHECK(exact >= bound - std::log(51.0));
        CHECK(exact <= bound);
    }
    CHECK_THROWS_AS(chernoff_check(20, p, 0.3), std::domain_error);
    CHECK_THROWS_AS(chernoff_check(20, p, 0.2), std::domain_error);
    CHECK_THROWS_AS(chernoff_check(20, p, 1.1), std::domain_error);
}

TEST_CASE("monte carlo frequency: degenerate events and determinism") {
    const auto model = distribution::exponential(0.5);
    CHECK(monte_carlo_event_freq(model, 2.0, 10, deviation_event::at_least(0.0), 100, 5) == 1.0);
    CHECK(monte_carlo_event_freq(model, 2.0, 10, deviation_event::at_most(-1.0), 100, 5) == 0.0);
    const auto a = monte_carlo_event_freq(model, 2.0, 20, deviation_event::at_least(1.0), 2000, 3);
    const auto b = monte_carlo_event_freq(model, 2.0, 20, deviation_event::at_least(1.0), 2000, 3);
    CHECK(a == b);
    CHECK_THROWS_AS(
        monte_carlo_event_freq(model, 0.0, 10, deviation_event::at_least(0.0), 10, 1),
        std::domain_error);
    CHECK_THROWS_AS(
        monte_carlo_event_freq(model, 2.0, 0, deviation_event::at_least(0.0), 10, 1),
        std::domain_error);
    CHECK_THROWS_AS(
        monte_carlo_event_freq(model, 2.0, 10, deviation_event::at_least(0.0), 0, 1),
        std::domain_error);
}

TEST_CASE("monte carlo agrees with the serial reference and the estimator pipeline") {
    const auto model = distribution::exponential(0.5);
    const auto event = deviation_event::at_least(1.0);
    const std::int64_t n = 20;
    const std::int64_t trials = 2000;
    const std::uint64_t seed = 3;
    const double parallel = monte_carlo_event_freq(model, 2.0, n, event, trials, seed);
    const double serial = monte_carlo_event_freq_serial(model, 2.0, n, event, trials, seed);
    CHECK(parallel == serial);

    std::int64_t hits = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        const auto batch = sample(model, n, rng::substream(seed, static_cast<std::uint64_t>(t)));
        if (event.contains(empirical_cumhaz(summarize(batch, 2.0)))) ++hits;
    }
    CHECK(parallel == static_cast<double>(hits) / static_cast<double>(trials));
}

TEST_CASE("monte carlo frequency tracks the exact law") {
    const auto model = distribution::exponential(0.5);
    const auto event = deviation_event::at_least(1.0);
    const std::int64_t n = 20;
    const std::int64_t trials = 2000;
    const probability p(std::exp(-1.0));  // S(2) under the model
    const double q = event_probability(make_ch_law(n, p), event).prob;
    const double freq = monte_carlo_event_freq(model, 2.0, n, event, trials, 3);
    const double band = 3.0 * std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
    CHECK(std::abs(freq - q) <= band);
}
