#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hazardld/commands.hpp"
#include "hazardld/table_io.hpp"

namespace {

struct common_opts {
    std::string format;
    std::string out;
};

void add_common(CLI::App* cmd, common_opts& c, const char* default_format) {
    c.format = default_format;
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", c.out, "Write output to this path instead of stdout");
}

hazardld::output_format to_format(const std::string& name) {
    return name == "json" ? hazardld::output_format::json : hazardld::output_format::csv;
}

void deliver(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    hazardld::write_text_file(out_path, content);
}

void add_model_options(CLI::App* cmd, hazardld::model_config& model) {
    cmd->add_option("--dist", model.family, "Model family: exponential, weibull, or empirical")
        ->capture_default_str();
    cmd->add_option("--rate", model.rate, "Exponential rate")->capture_default_str();
    cmd->add_option("--shape", model.shape, "Weibull shape")->capture_default_str();
    cmd->add_option("--scale", model.scale, "Weibull scale")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convergence-rate functions and exact finite-sample checks for the "
                 "empirical cumulative hazard estimator"};
    app.require_subcommand(1);

    auto* curve = app.add_subcommand(
        "rate-curve", "Rate function of the empirical cumulative hazard over a value grid");
    hazardld::rate_curve_config curve_cfg;
    common_opts curve_common;
    curve->add_option("--p", curve_cfg.p_list,
                      "Tail probabilities (default: e^-0.5, e^-1, e^-1.5, e^-2)")
        ->delimiter(',');
    curve->add_option("--y-min", curve_cfg.y_min)->capture_default_str();
    curve->add_option("--y-max", curve_cfg.y_max)->capture_default_str();
    curve->add_option("--y-step", curve_cfg.y_step)->capture_default_str();
    add_common(curve, curve_common, "csv");

    auto* surf = app.add_subcommand(
        "surface", "Two-parameter rate surface over (t, y) with equal-rate contour lines");
    hazardld::surface_config surf_cfg;
    common_opts surf_common;
    add_model_options(surf, surf_cfg.model);
    surf->add_option("--data", surf_cfg.model.data_path,
                     "waiting_time CSV backing the empirical family");
    surf->add_option("--t-min", surf_cfg.t_min)->capture_default_str();
    surf->add_option("--t-max", surf_cfg.t_max)->capture_default_str();
    surf->add_option("--t-step", surf_cfg.t_step)->capture_default_str();
    surf->add_option("--y-min", surf_cfg.y_min)->capture_default_str();
    surf->add_option("--y-max", surf_cfg.y_max)->capture_default_str();
    surf->add_option("--y-step", surf_cfg.y_step)->capture_default_str();
    surf->add_option("--levels", surf_cfg.levels, "Contour levels (default: 2^2 .. 2^-8)")
        ->delimiter(',');
    add_common(surf, surf_common, "csv");

    auto* ldp = app.add_subcommand(
        "ldp-check", "Exact decay rate of a deviation event against its large-n limit");
    hazardld::ldp_check_config ldp_cfg;
    common_opts ldp_common;
    ldp->add_option("--p", ldp_cfg.p, "Tail probability")->required();
    ldp->add_option("--event", ldp_cfg.event.kind, "Event kind: at-least, at-most, or outside")
        ->capture_default_str();
    ldp->add_option("--y0", ldp_cfg.event.y0, "One-sided event threshold");
    ldp->add_option("--lo", ldp_cfg.event.lo, "Lower bound of the outside event");
    ldp->add_option("--hi", ldp_cfg.event.hi, "Upper bound of the outside event");
    ldp->add_option("--n", ldp_cfg.n_list, "Sample sizes (default: 16,64,256,1024,4096)")
        ->delimiter(',');
    add_common(ldp, ldp_common, "csv");

    auto* ou = app.add_subcommand(
        "over-under", "Exact probabilities of over- and under-shooting the true value by delta");
    hazardld::over_under_config ou_cfg;
    common_opts ou_common;
    ou->add_option("--p", ou_cfg.p, "Tail probability")->required();
    ou->add_option("--delta", ou_cfg.delta, "Margin, inside (0, -ln p)")->required();
    ou->add_option("--n", ou_cfg.n_list, "Sample sizes (default: 20,50,100,200,1000)")
        ->delimiter(',');
    add_common(ou, ou_common, "csv");

    auto* sym = app.add_subcommand(
        "symmetry", "Exact and second-order symmetry defect of the centered rate function");
    hazardld::symmetry_config sym_cfg;
    common_opts sym_common;
    sym->add_option("--p", sym_cfg.p_list,
                    "Tail probabilities (default: e^-0.5, e^-1, e^-1.5, e^-2)")
        ->delimiter(',');
    sym->add_option("--z", sym_cfg.z_list, "Explicit z values, each inside (0, -ln p) for every p")
        ->delimiter(',');
    sym->add_option("--z-count", sym_cfg.z_count, "Points per p when --z is omitted")
        ->capture_default_str();
    add_common(sym, sym_common, "csv");

    auto* est = app.add_subcommand(
        "estimate", "Empirical survival and cumulative hazard at thresholds, with exact "
                    "over/under diagnostics when the model is known");
    hazardld::estimate_config est_cfg;
    hazardld::model_config est_model;
    common_opts est_common;
    est->add_option("--data", est_cfg.data_path, "waiting_time CSV with observed data");
    auto* est_dist = est->add_option("--dist", est_model.family,
                                     "Generate the batch from this family instead of a file");
    est->add_option("--rate", est_model.rate, "Exponential rate")->capture_default_str();
    est->add_option("--shape", est_model.shape, "Weibull shape")->capture_default_str();
    est->add_option("--scale", est_model.scale, "Weibull scale")->capture_default_str();
    est->add_option("--model-data", est_model.data_path,
                    "waiting_time CSV backing an empirical generating model");
    est->add_option("--n", est_cfg.n, "Generated batch size");
    est->add_option("--seed", est_cfg.seed, "Generator seed")->capture_default_str();
    est->add_option("--thresholds", est_cfg.thresholds, "Thresholds to evaluate")
        ->delimiter(',')
        ->required();
    est->add_option("--delta", est_cfg.delta, "Margin for exact over/under diagnostics");
    est->add_option("--p", est_cfg.true_p, "True tail probability at the single threshold");
    add_common(est, est_common, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*curve) {
            curve_cfg.format = to_format(curve_common.format);
            deliver(curve_common.out, hazardld::cmd_rate_curve(curve_cfg));
        } else if (*surf) {
            surf_cfg.format = to_format(surf_common.format);
            deliver(surf_common.out, hazardld::cmd_surface(surf_cfg));
        } else if (*ldp) {
            ldp_cfg.format = to_format(ldp_common.format);
            deliver(ldp_common.out, hazardld::cmd_ldp_check(ldp_cfg));
        } else if (*ou) {
            ou_cfg.format = to_format(ou_common.format);
            deliver(ou_common.out, hazardld::cmd_over_under(ou_cfg));
        } else if (*sym) {
            sym_cfg.format = to_format(sym_common.format);
            deliver(sym_common.out, hazardld::cmd_symmetry(sym_cfg));
        } else if (*est) {
            if (est_dist->count() > 0) est_cfg.model = est_model;
            est_cfg.format = to_format(est_common.format);
            deliver(est_common.out, hazardld::cmd_estimate(est_cfg));
        }
        return 0;
    } catch (const hazardld::usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
