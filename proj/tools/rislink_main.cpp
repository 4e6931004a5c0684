// Command line front end for the rislink experiment suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "rislink/config.hpp"
#include "rislink/errors.hpp"
#include "rislink/experiments.hpp"
#include "rislink/units.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::optional<uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("-c,--config", opts.config_path, "key = value configuration file");
    cmd->add_option("-o,--out", opts.out_path, "output file (default: stdout)");
    cmd->add_option("--seed", opts.seed, "override the configured seed");
}

rislink::ExperimentConfig resolve_config(const CommonOpts& opts) {
    rislink::ExperimentConfig cfg;
    if (!opts.config_path.empty()) cfg = rislink::load_config(opts.config_path);
    if (opts.seed) cfg.seed = *opts.seed;
    rislink::validate_config(cfg);
    return cfg;
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw rislink::Error("cannot open output file '" + opts.out_path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analytical UAV-to-ground link model over a reflective panel"};
    app.require_subcommand(1);

    CommonOpts snr_opts;
    CLI::App* snr = app.add_subcommand("sweep-snr", "average SNR vs distance, with benchmarks");
    add_common(snr, snr_opts);

    CommonOpts op_opts;
    CLI::App* op = app.add_subcommand("sweep-op", "outage probability vs distance");
    add_common(op, op_opts);

    CommonOpts aod_opts;
    double target_ms = 1.0;
    double theta_deg = -1.0;
    CLI::App* aod =
        app.add_subcommand("aod-boundary", "ground region where mean outages stay short");
    add_common(aod, aod_opts);
    aod->add_option("--target-ms", target_ms, "outage duration target in milliseconds")
        ->check(CLI::PositiveNumber);
    aod->add_option("--theta-deg", theta_deg,
                    "polar angle in degrees (default: theta_deg from the config)");

    CommonOpts val_opts;
    CLI::App* val =
        app.add_subcommand("validate", "sampling-based cross checks of the analytic model");
    add_common(val, val_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (snr->parsed()) {
            emit(snr_opts, rislink::sweep_snr_csv(resolve_config(snr_opts)));
        } else if (op->parsed()) {
            emit(op_opts, rislink::sweep_op_csv(resolve_config(op_opts)));
        } else if (aod->parsed()) {
            const rislink::ExperimentConfig cfg = resolve_config(aod_opts);
            const double theta =
                rislink::deg_to_rad(theta_deg > 0.0 ? theta_deg : cfg.theta_deg);
            emit(aod_opts,
                 rislink::aod_boundary_csv(cfg, target_ms * 1e-3, theta));
        } else if (val->parsed()) {
            const rislink::ExperimentConfig cfg = resolve_config(val_opts);
            const auto rows = rislink::run_validation(cfg);
            emit(val_opts, rislink::validation_report(rows, cfg));
            for (const auto& row : rows) {
                if (!row.pass) return 1;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
