#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "rislink/geometry.hpp"
#include "rislink/linkbudget.hpp"
#include "rislink/stats.hpp"

namespace rislink {

// Every tunable of the experiment tools, with the defaults the tools assume
// when a key is absent.  Angles and gains are stored in the units the config
// file uses (degrees, dB); the accessor functions below convert.
struct ExperimentConfig {
    double m = 3.0;
    double omega = 1.0;
    double c0_db = -30.0;
    double d0_m = 1.0;
    double du_m = 50.0;
    double n = 2.2;
    double gamma_t_db = 50.0;
    double gamma_thr_db = 20.0;
    double xi_deg = 15.0;
    double half_width_m = 1.0;
    double half_height_m = 0.5;
    int num_elements = 800;
    double f_d_hz = 5.0;
    double g_r = 1.0;
    double lambda_m = 0.1;
    double phi_deg = 90.0;
    double theta_deg = 90.0;
    std::string bench1_combining = "coherent";
    uint64_t seed = 42;

    double r_min_m = 3.0;
    double r_max_m = 100.0;
    double r_step_m = 0.25;
    double op_r_min_m = 12.5;
    double op_r_max_m = 30.0;
    double op_r_step_m = 0.25;

    int aod_rays = 181;
    double aod_rho_min_m = 0.5;
    double aod_rho_max_m = 80.0;
    double aod_rho_step_m = 0.25;
    double aod_max_vertex_gap_m = 0.5;

    long long mc_trials_moments = 1000000;
    long long mc_trials_op = 10000000;
    long long mc_samples_area = 1000000;
    int mc_geometries = 1000;
    double trace_duration_s = 120.0;
    double trace_dt_s = 0.001;
    int sinusoids_per_component = 64;
};

// Parses "key = value" lines; '#' starts a comment, blank lines are skipped.
// Unknown keys and malformed lines raise ParseError naming the line number.
// The result is validated before being returned.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

// Range checks on every field; throws InvalidArgument naming the key and the
// violated constraint.
void validate_config(const ExperimentConfig& cfg);

// One "<prefix>key = value" line per key, in declaration order, for
// reproducible output headers.
std::string resolved_config_lines(const ExperimentConfig& cfg, const std::string& prefix);

// Module structs assembled from the config.
SphericalPosition position_at(const ExperimentConfig& cfg, double r);
NakagamiParams nakagami_params(const ExperimentConfig& cfg);
ConeAntenna cone_antenna(const ExperimentConfig& cfg);
RisPanel ris_panel(const ExperimentConfig& cfg);
RadioConfig radio_config(const ExperimentConfig& cfg);
PathLossParams path_loss_params(const ExperimentConfig& cfg);
BenchmarkGeometry benchmark_geometry(const ExperimentConfig& cfg);
Bench1Combining bench1_combining_mode(const ExperimentConfig& cfg);

}  // namespace rislink
