#include "hazardld/commands.hpp"

#include <cmath>
#include <utility>

#include <json.hpp>

#include "hazardld/contour.hpp"
#include "hazardld/estimator.hpp"
#include "hazardld/extended_real.hpp"
#include "hazardld/probability.hpp"
#include "hazardld/rate_functions.hpp"
#include "hazardld/surface.hpp"
#include "hazardld/table_io.hpp"

namespace hazardld {

using nlohmann::json;

namespace {

std::vector<double> make_grid(double lo, double hi, double step, const char* name) {
    if (!(std::isfinite(lo) && std::isfinite(hi) && step > 0.0 && std::isfinite(step)))
        throw usage_error(std::string(name) + " grid bounds must be finite with positive step");
    if (!(lo <= hi))
        throw usage_error(std::string(name) + " grid must have min <= max");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    std::vector<double> grid;
    grid.reserve(count + 1);
    for (std::size_t j = 0; j <= count; ++j) grid.push_back(lo + static_cast<double>(j) * step);
    return grid;
}

probability checked_probability(double p) {
    try {
        return probability(p);
    } catch (const std::domain_error& e) {
        throw usage_error(e.what());
    }
}

json finite_or_inf(double v) {
    if (is_infinite(v)) return v > 0 ? json("inf") : json("-inf");
    return json(v);
}

}  // namespace

distribution model_config::build() const {
    try {
        if (family == "exponential") return distribution::exponential(rate);
        if (family == "weibull") return distribution::weibull(shape, scale);
        if (family == "empirical") {
            if (data_path.empty())
                throw usage_error("empirical family requires a sample file (--data)");
            return distribution::empirical_step(read_waiting_times(data_path).values);
        }
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception& e) {
        throw usage_error(e.what());
    }
    throw usage_error("unknown family \"" + family + "\" (expected exponential, weibull, or empirical)");
}

deviation_event event_config::build() const {
    try {
        if (kind == "at-least") {
            if (!y0) throw usage_error("at-least event requires --y0");
            return deviation_event::at_least(*y0);
        }
        if (kind == "at-most") {
            if (!y0) throw usage_error("at-most event requires --y0");
            return deviation_event::at_most(*y0);
        }
        if (kind == "outside") {
            if (!lo || !hi) throw usage_error("outside event requires --lo and --hi");
            return deviation_event::outside(*lo, *hi);
        }
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception& e) {
        throw usage_error(e.what());
    }
    throw usage_error("unknown event kind \"" + kind +
                      "\" (expected at-least, at-most, or outside)");
}

std::vector<double> default_tail_probabilities() {
    return {std::exp(-0.5), std::exp(-1.0), std::exp(-1.5), std::exp(-2.0)};
}

std::vector<double> default_contour_levels() {
    std::vector<double> levels;
    for (int i = 2; i >= -8; --i) levels.push_back(std::ldexp(1.0, i));
    return levels;
}

std::string cmd_rate_curve(const rate_curve_config& cfg) {
    const auto p_list = cfg.p_list.empty() ? default_tail_probabilities() : cfg.p_list;
    const auto y_grid = make_grid(cfg.y_min, cfg.y_max, cfg.y_step, "y");
    if (!(cfg.y_min >= 0.0))
        throw usage_error("y grid must be nonnegative");
    std::vector<rate_curve> curves;
    curves.reserve(p_list.size());
    for (double p : p_list) {
        try {
            curves.push_back(sample_rate_curve(checked_probability(p), y_grid));
        } catch (const std::domain_error& e) {
            throw usage_error(e.what());
        }
    }

    if (cfg.format == output_format::json) {
        json rows = json::array();
        for (const auto& curve : curves)
            for (std::size_t j = 0; j < curve.abscissas.size(); ++j)
                rows.push_back({{"p", curve.parameter.value()},
                                {"y", curve.abscissas[j]},
                                {"rate", curve.ordinates[j]}});
        return rows.dump(2) + "\n";
    }
    csv_table table{{"p", "y", "rate"}, {}};
    table.rows.reserve(curves.size() * y_grid.size());
    for (const auto& curve : curves)
        for (std::size_t j = 0; j < curve.abscissas.size(); ++j)
            table.rows.push_back({curve.parameter.value(), curve.abscissas[j],
                                  curve.ordinates[j]});
    return to_csv(table);
}

std::string cmd_surface(const surface_config& cfg) {
    const distribution model = cfg.model.build();
    const auto t_grid = make_grid(cfg.t_min, cfg.t_max, cfg.t_step, "t");
    const auto y_grid = make_grid(cfg.y_min, cfg.y_max, cfg.y_step, "y");
    const auto levels = cfg.levels.empty() ? default_contour_levels() : cfg.levels;
    for (double level : levels)
        if (!(level > 0.0) || !std::isfinite(level))
            throw usage_error("contour levels must be positive and finite");
    rate_surface_grid grid;
    try {
        grid = make_rate_surface(model, t_grid, y_grid);
    } catch (const std::domain_error& e) {
        throw usage_error(e.what());
    }

    if (cfg.format == output_format::json) {
        json out;
        out["grid"] = {{"t", grid.t_grid}, {"y", grid.y_grid}, {"ch", grid.ch_curve}};
        json rate_rows = json::array();
        for (std::size_t i = 0; i < grid.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < grid.cols(); ++j) row.push_back(grid.at(i, j));
            rate_rows.push_back(std::move(row));
        }
        out["grid"]["rate"] = std::move(rate_rows);
        json contours = json::array();
        for (double level : levels) {
            json segs = json::array();
            for (const auto& s : contour_segments(grid, level))
                segs.push_back({s.t0, s.y0, s.t1, s.y1});
            contours.push_back({{"level", level}, {"segments", std::move(segs)}});
        }
        out["contours"] = std::move(contours);
        return out.dump(2) + "\n";
    }

    csv_table values{{"t", "y", "rate", "ch"}, {}};
    values.rows.reserve(grid.rows() * grid.cols());
    for (std::size_t i = 0; i < grid.rows(); ++i)
        for (std::size_t j = 0; j < grid.cols(); ++j)
            values.rows.push_back({grid.t_grid[i], grid.y_grid[j], grid.at(i, j), grid.ch_curve[i]});
    csv_table polylines{{"level", "segment", "t", "y"}, {}};
    for (double level : levels) {
        const auto segs = contour_segments(grid, level);
        for (std::size_t s = 0; s < segs.size(); ++s) {
            polylines.rows.push_back({level, static_cast<double>(s), segs[s].t0, segs[s].y0});
            polylines.rows.push_back({level, static_cast<double>(s), segs[s].t1, segs[s].y1});
        }
    }
    return to_csv(std::vector<csv_table>{std::move(values), std::move(polylines)});
}

std::string cmd_ldp_check(const ldp_check_config& cfg) {
    const probability p = checked_probability(cfg.p);
    const deviation_event event = cfg.event.build();
    const std::vector<std::int64_t> n_list =
        cfg.n_list.empty() ? std::vector<std::int64_t>{16, 64, 256, 1024, 4096} : cfg.n_list;
    const auto rows = ldp_convergence(p, event, n_list);

    if (cfg.format == output_format::json) {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"n", r.n},
                           {"log_prob", r.exact_log_prob},
                           {"empirical_rate", r.empirical_rate},
                           {"limit_rate", r.limit_rate},
                           {"gap", r.gap}});
        return out.dump(2) + "\n";
    }
    csv_table table{{"n", "log_prob", "empirical_rate", "limit_rate", "gap"}, {}};
    for (const auto& r : rows)
        table.rows.push_back({static_cast<double>(r.n), r.exact_log_prob, r.empirical_rate,
                              r.limit_rate, r.gap});
    return to_csv(table);
}

std::string cmd_over_under(const over_under_config& cfg) {
    const probability p = checked_probability(cfg.p);
    const std::vector<std::int64_t> n_list =
        cfg.n_list.empty() ? std::vector<std::int64_t>{20, 50, 100, 200, 1000} : cfg.n_list;
    std::vector<over_under_report> reports;
    reports.reserve(n_list.size());
    for (std::int64_t n : n_list) reports.push_back(over_under(n, p, cfg.delta));

    if (cfg.format == output_format::json) {
        json out = json::array();
        for (const auto& r : reports)
            out.push_back({{"n", r.n},
                           {"p", r.p},
                           {"delta", r.delta},
                           {"prob_over", r.prob_over},
                           {"prob_under", r.prob_under},
                           {"log_ratio_rate", r.log_ratio_rate},
                           {"limit", r.limit}});
        return out.dump(2) + "\n";
    }
    csv_table table{{"n", "p", "delta", "prob_over", "prob_under", "log_ratio_rate", "limit"}, {}};
    for (const auto& r : reports)
        table.rows.push_back({static_cast<double>(r.n), r.p, r.delta, r.prob_over, r.prob_under,
                              r.log_ratio_rate, r.limit});
    return to_csv(table);
}

std::string cmd_symmetry(const symmetry_config& cfg) {
    const auto p_list = cfg.p_list.empty() ? default_tail_probabilities() : cfg.p_list;
    if (cfg.z_list.empty() && cfg.z_count < 1)
        throw usage_error("z count must be at least 1");
    struct row_t {
        double p, z, exact, approx;
    };
    std::vector<row_t> rows;
    for (double pv : p_list) {
        const probability p = checked_probability(pv);
        const double zmax = -std::log(pv);
        std::vector<double> zs;
        if (cfg.z_list.empty()) {
            for (int j = 1; j <= cfg.z_count; ++j)
                zs.push_back(zmax * static_cast<double>(j) / static_cast<double>(cfg.z_count + 1));
        } else {
            for (double z : cfg.z_list) {
                if (!(z > 0.0 && z < zmax))
                    throw usage_error("z = " + format_value(z) +
                                      " escapes (0, -ln p) for p = " + format_value(pv));
                zs.push_back(z);
            }
        }
        for (double z : zs)
            rows.push_back({pv, z, symmetry_defect_exact(p, z), symmetry_defect_approx(p, z)});
    }

    if (cfg.format == output_format::json) {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"p", r.p},
                           {"z", r.z},
                           {"defect_exact", r.exact},
                           {"defect_approx", r.approx},
                           {"abs_error", std::abs(r.approx - r.exact)}});
        return out.dump(2) + "\n";
    }
    csv_table table{{"p", "z", "defect_exact", "defect_approx", "abs_error"}, {}};
    for (const auto& r : rows)
        table.rows.push_back({r.p, r.z, r.exact, r.approx, std::abs(r.approx - r.exact)});
    return to_csv(table);
}

std::string cmd_estimate(const estimate_config& cfg) {
    const bool from_file = !cfg.data_path.empty();
    if (from_file == cfg.model.has_value())
        throw usage_error("estimate needs exactly one source: --data FILE or --dist with --n/--seed");
    if (cfg.thresholds.empty())
        throw usage_error("estimate requires at least one threshold");
    if (cfg.true_p && cfg.thresholds.size() != 1)
        throw usage_error("--p applies to a single threshold; pass a model for several");

    std::optional<distribution> model;
    sample_batch batch;
    if (from_file) {
        try {
            batch = read_waiting_times(cfg.data_path);
        } catch (const std::exception& e) {
            throw usage_error(e.what());
        }
    } else {
        model = cfg.model->build();
        if (cfg.n < 1) throw usage_error("generated source requires --n >= 1");
        batch = sample(*model, cfg.n, cfg.seed);
    }
    if (cfg.delta && !cfg.true_p && !model)
        throw usage_error("over/under diagnostics need the true tail probability: "
                          "pass a model or --p");

    json out;
    if (from_file) {
        out["source"] = {{"kind", "file"},
                         {"path", cfg.data_path},
                         {"n", static_cast<std::int64_t>(batch.values.size())}};
    } else {
        out["source"] = {{"kind", "generated"},
                         {"family", cfg.model->family},
                         {"model", model->describe()},
                         {"n", static_cast<std::int64_t>(batch.values.size())},
                         {"seed", cfg.seed}};
    }

    csv_table table{{"threshold", "n", "successes", "empirical_survival", "empirical_cumhaz"}, {}};
    const bool diagnostics = cfg.delta.has_value();
    if (diagnostics) {
        for (const char* col : {"true_p", "true_cumhaz", "rate_at_estimate", "prob_over",
                                "prob_under", "log_ratio_rate", "limit"})
            table.header.emplace_back(col);
    }

    json records = json::array();
    for (double threshold : cfg.thresholds) {
        threshold_summary s{};
        try {
            s = summarize(batch, threshold);
        } catch (const std::domain_error& e) {
            throw usage_error(e.what());
        }
        const double sn = empirical_survival(s);
        const double hn = empirical_cumhaz(s);
        json rec = {{"threshold", threshold},
                    {"n", s.n},
                    {"successes", s.successes},
                    {"empirical_survival", sn},
                    {"empirical_cumhaz", finite_or_inf(hn)}};
        std::vector<double> row{threshold, static_cast<double>(s.n),
                                static_cast<double>(s.successes), sn, hn};
        if (diagnostics) {
            double p_true = 0.0;
            if (cfg.true_p) {
                p_true = *cfg.true_p;
            } else {
                p_true = model->survival(threshold);
                if (!(p_true > 0.0 && p_true < 1.0))
                    throw usage_error("model survival at threshold " + format_value(threshold) +
                                      " is not inside (0,1); diagnostics undefined");
            }
            const probability p = checked_probability(p_true);
            over_under_report r{};
            try {
                r = over_under(s.n, p, *cfg.delta);
            } catch (const std::domain_error& e) {
                throw usage_error(e.what());
            }
            const double rate_at_estimate = ch_rate(p, hn);
            rec["diagnostics"] = {{"true_p", p.value()},
                                  {"true_cumhaz", -std::log(p.value())},
                                  {"delta", *cfg.delta},
                                  {"rate_at_estimate", rate_at_estimate},
                                  {"prob_over", r.prob_over},
                                  {"prob_under", r.prob_under},
                                  {"log_ratio_rate", r.log_ratio_rate},
                                  {"limit", r.limit}};
            for (double v : {p.value(), -std::log(p.value()), rate_at_estimate, r.prob_over,
                             r.prob_under, r.log_ratio_rate, r.limit})
                row.push_back(v);
        }
        records.push_back(std::move(rec));
        table.rows.push_back(std::move(row));
    }
    out["thresholds"] = std::move(records);

    if (cfg.format == output_format::csv) return to_csv(table);
    return out.dump(2) + "\n";
}

}  // namespace hazardld
