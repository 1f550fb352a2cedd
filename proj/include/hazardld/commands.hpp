#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hazardld/distribution.hpp"
#include "hazardld/exact_law.hpp"

namespace hazardld {

enum class output_format { csv, json };

/// Bad command configuration or unusable input file; the CLI maps this to
/// exit status 2, same as library domain errors.
class usage_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Survival model selection shared by the surface and estimate commands.
struct model_config {
    std::string family = "exponential";  // exponential | weibull | empirical
    double rate = 0.5;
    double shape = 1.0;
    double scale = 1.0;
    std::string data_path;  // sample file for the empirical family

    [[nodiscard]] distribution build() const;
};

/// Tail probabilities of the default curve set: e^{-1/2}, e^{-1}, e^{-3/2}, e^{-2}.
[[nodiscard]] std::vector<double> default_tail_probabilities();
/// Default contour levels 2^2 down to 2^-8.
[[nodiscard]] std::vector<double> default_contour_levels();

struct rate_curve_config {
    std::vector<double> p_list;  // empty: default_tail_probabilities()
    double y_min = 0.0;
    double y_max = 4.0;
    double y_step = 0.01;
    output_format format = output_format::csv;
};
[[nodiscard]] std::string cmd_rate_curve(const rate_curve_config& cfg);

struct surface_config {
    model_config model;
    double t_min = 0.25;
    double t_max = 10.0;
    double t_step = 0.25;
    double y_min = 0.0;
    double y_max = 5.0;
    double y_step = 0.0625;
    std::vector<double> levels;  // empty: default_contour_levels()
    output_format format = output_format::csv;
};
[[nodiscard]] std::string cmd_surface(const surface_config& cfg);

struct event_config {
    std::string kind = "at-least";  // at-least | at-most | outside
    std::optional<double> y0;       // one-sided threshold
    std::optional<double> lo;       // outside bounds
    std::optional<double> hi;

    [[nodiscard]] deviation_event build() const;
};

struct ldp_check_config {
    double p = 0.0;
    event_config event;
    std::vector<std::int64_t> n_list;  // empty: 16, 64, 256, 1024, 4096
    output_format format = output_format::csv;
};
[[nodiscard]] std::string cmd_ldp_check(const ldp_check_config& cfg);

struct over_under_config {
    double p = 0.0;
    double delta = 0.0;
    std::vector<std::int64_t> n_list;  // empty: 20, 50, 100, 200, 1000
    output_format format = output_format::csv;
};
[[nodiscard]] std::string cmd_over_under(const over_under_config& cfg);

struct symmetry_config {
    std::vector<double> p_list;  // empty: default_tail_probabilities()
    std::vector<double> z_list;  // empty: z_count points spread over (0, -ln p) per p
    int z_count = 50;
    output_format format = output_format::csv;
};
[[nodiscard]] std::string cmd_symmetry(const symmetry_config& cfg);

struct estimate_config {
    std::string data_path;              // file source, or:
    std::optional<model_config> model;  // generated source with n and seed
    std::int64_t n = 0;
    std::uint64_t seed = 0;
    std::vector<double> thresholds;
    std::optional<double> delta;   // requests exact over/under diagnostics
    std::optional<double> true_p;  // explicit tail probability (single threshold only)
    output_format format = output_format::json;
};
[[nodiscard]] std::string cmd_estimate(const estimate_config& cfg);

}  // namespace hazardld
