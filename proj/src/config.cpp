#include "rislink/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "rislink/errors.hpp"
#include "rislink/units.hpp"

namespace rislink {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& v, int line) {
    size_t used = 0;
    double out;
    try {
        out = std::stod(v, &used);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": '" + v + "' is not a number");
    }
    if (used != v.size()) {
        throw ParseError("line " + std::to_string(line) + ": trailing junk in number '" + v + "'");
    }
    return out;
}

long long parse_int(const std::string& v, int line) {
    size_t used = 0;
    long long out;
    try {
        out = std::stoll(v, &used);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": '" + v + "' is not an integer");
    }
    if (used != v.size()) {
        throw ParseError("line " + std::to_string(line) + ": trailing junk in integer '" + v +
                         "'");
    }
    return out;
}

uint64_t parse_u64(const std::string& v, int line) {
    size_t used = 0;
    unsigned long long out;
    try {
        out = std::stoull(v, &used);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": '" + v +
                         "' is not an unsigned integer");
    }
    if (used != v.size()) {
        throw ParseError("line " + std::to_string(line) + ": trailing junk in integer '" + v +
                         "'");
    }
    return out;
}

std::string g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void require(bool ok, const std::string& key, const std::string& constraint) {
    if (!ok) {
        throw InvalidArgument("config: " + key + " " + constraint);
    }
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    // One setter per key; unknown keys are rejected rather than ignored so a
    // typo cannot silently fall back to a default.
    const std::map<std::string, std::function<void(const std::string&, int)>> setters = {
        {"m", [&](const std::string& v, int l) { cfg.m = parse_double(v, l); }},
        {"omega", [&](const std::string& v, int l) { cfg.omega = parse_double(v, l); }},
        {"c0_db", [&](const std::string& v, int l) { cfg.c0_db = parse_double(v, l); }},
        {"d0_m", [&](const std::string& v, int l) { cfg.d0_m = parse_double(v, l); }},
        {"du_m", [&](const std::string& v, int l) { cfg.du_m = parse_double(v, l); }},
        {"n", [&](const std::string& v, int l) { cfg.n = parse_double(v, l); }},
        {"gamma_t_db", [&](const std::string& v, int l) { cfg.gamma_t_db = parse_double(v, l); }},
        {"gamma_thr_db",
         [&](const std::string& v, int l) { cfg.gamma_thr_db = parse_double(v, l); }},
        {"xi_deg", [&](const std::string& v, int l) { cfg.xi_deg = parse_double(v, l); }},
        {"half_width_m",
         [&](const std::string& v, int l) { cfg.half_width_m = parse_double(v, l); }},
        {"half_height_m",
         [&](const std::string& v, int l) { cfg.half_height_m = parse_double(v, l); }},
        {"num_elements",
         [&](const std::string& v, int l) { cfg.num_elements = static_cast<int>(parse_int(v, l)); }},
        {"f_d_hz", [&](const std::string& v, int l) { cfg.f_d_hz = parse_double(v, l); }},
        {"g_r", [&](const std::string& v, int l) { cfg.g_r = parse_double(v, l); }},
        {"lambda_m", [&](const std::string& v, int l) { cfg.lambda_m = parse_double(v, l); }},
        {"phi_deg", [&](const std::string& v, int l) { cfg.phi_deg = parse_double(v, l); }},
        {"theta_deg", [&](const std::string& v, int l) { cfg.theta_deg = parse_double(v, l); }},
        {"bench1_combining", [&](const std::string& v, int) { cfg.bench1_combining = v; }},
        {"seed", [&](const std::string& v, int l) { cfg.seed = parse_u64(v, l); }},
        {"r_min_m", [&](const std::string& v, int l) { cfg.r_min_m = parse_double(v, l); }},
        {"r_max_m", [&](const std::string& v, int l) { cfg.r_max_m = parse_double(v, l); }},
        {"r_step_m", [&](const std::string& v, int l) { cfg.r_step_m = parse_double(v, l); }},
        {"op_r_min_m", [&](const std::string& v, int l) { cfg.op_r_min_m = parse_double(v, l); }},
        {"op_r_max_m", [&](const std::string& v, int l) { cfg.op_r_max_m = parse_double(v, l); }},
        {"op_r_step_m",
         [&](const std::string& v, int l) { cfg.op_r_step_m = parse_double(v, l); }},
        {"aod_rays",
         [&](const std::string& v, int l) { cfg.aod_rays = static_cast<int>(parse_int(v, l)); }},
        {"aod_rho_min_m",
         [&](const std::string& v, int l) { cfg.aod_rho_min_m = parse_double(v, l); }},
        {"aod_rho_max_m",
         [&](const std::string& v, int l) { cfg.aod_rho_max_m = parse_double(v, l); }},
        {"aod_rho_step_m",
         [&](const std::string& v, int l) { cfg.aod_rho_step_m = parse_double(v, l); }},
        {"aod_max_vertex_gap_m",
         [&](const std::string& v, int l) { cfg.aod_max_vertex_gap_m = parse_double(v, l); }},
        {"mc_trials_moments",
         [&](const std::string& v, int l) { cfg.mc_trials_moments = parse_int(v, l); }},
        {"mc_trials_op",
         [&](const std::string& v, int l) { cfg.mc_trials_op = parse_int(v, l); }},
        {"mc_samples_area",
         [&](const std::string& v, int l) { cfg.mc_samples_area = parse_int(v, l); }},
        {"mc_geometries",
         [&](const std::string& v, int l) { cfg.mc_geometries = static_cast<int>(parse_int(v, l)); }},
        {"trace_duration_s",
         [&](const std::string& v, int l) { cfg.trace_duration_s = parse_double(v, l); }},
        {"trace_dt_s", [&](const std::string& v, int l) { cfg.trace_dt_s = parse_double(v, l); }},
        {"sinusoids_per_component",
         [&](const std::string& v, int l) {
             cfg.sinusoids_per_component = static_cast<int>(parse_int(v, l));
         }},
    };

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string stripped = trim(raw);
        if (stripped.empty()) continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ParseError("line " + std::to_string(line) + ": expected 'key = value', got '" +
                             stripped + "'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            throw ParseError("line " + std::to_string(line) + ": empty key");
        }
        if (value.empty()) {
            throw ParseError("line " + std::to_string(line) + ": empty value for key '" + key +
                             "'");
        }
        const auto it = setters.find(key);
        if (it == setters.end()) {
            throw ParseError("line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
        it->second(value, line);
    }
    validate_config(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file '" + path + "'");
    }
    return parse_config(in);
}

void validate_config(const ExperimentConfig& cfg) {
    require(std::isfinite(cfg.m) && cfg.m >= 0.5 && cfg.m <= 9999.5, "m",
            "must lie in [0.5, 9999.5]");
    require(std::isfinite(cfg.omega) && cfg.omega > 0.0, "omega", "must be > 0");
    require(std::isfinite(cfg.c0_db), "c0_db", "must be finite");
    require(std::isfinite(cfg.d0_m) && cfg.d0_m > 0.0, "d0_m", "must be > 0");
    require(std::isfinite(cfg.du_m) && cfg.du_m > 0.0, "du_m", "must be > 0");
    require(std::isfinite(cfg.n) && cfg.n >= 0.0, "n", "must be >= 0");
    require(std::isfinite(cfg.gamma_t_db), "gamma_t_db", "must be finite");
    require(std::isfinite(cfg.gamma_thr_db), "gamma_thr_db", "must be finite");
    require(cfg.xi_deg > 0.0 && cfg.xi_deg < 90.0, "xi_deg", "must lie in (0, 90)");
    require(std::isfinite(cfg.half_width_m) && cfg.half_width_m > 0.0, "half_width_m",
            "must be > 0");
    require(std::isfinite(cfg.half_height_m) && cfg.half_height_m > 0.0, "half_height_m",
            "must be > 0");
    require(cfg.num_elements >= 1, "num_elements", "must be >= 1");
    require(std::isfinite(cfg.f_d_hz) && cfg.f_d_hz > 0.0, "f_d_hz", "must be > 0");
    require(std::isfinite(cfg.g_r) && cfg.g_r > 0.0, "g_r", "must be > 0");
    require(std::isfinite(cfg.lambda_m) && cfg.lambda_m > 0.0, "lambda_m", "must be > 0");
    require(cfg.phi_deg > 0.0 && cfg.phi_deg < 180.0, "phi_deg", "must lie in (0, 180)");
    require(cfg.theta_deg > 0.0 && cfg.theta_deg < 180.0, "theta_deg", "must lie in (0, 180)");
    require(cfg.bench1_combining == "coherent" || cfg.bench1_combining == "power_sum",
            "bench1_combining", "must be 'coherent' or 'power_sum'");
    require(std::isfinite(cfg.r_min_m) && cfg.r_min_m > 0.0, "r_min_m", "must be > 0");
    require(std::isfinite(cfg.r_max_m) && cfg.r_max_m >= cfg.r_min_m, "r_max_m",
            "must be >= r_min_m");
    require(std::isfinite(cfg.r_step_m) && cfg.r_step_m > 0.0, "r_step_m", "must be > 0");
    require(std::isfinite(cfg.op_r_min_m) && cfg.op_r_min_m > 0.0, "op_r_min_m", "must be > 0");
    require(std::isfinite(cfg.op_r_max_m) && cfg.op_r_max_m >= cfg.op_r_min_m, "op_r_max_m",
            "must be >= op_r_min_m");
    require(std::isfinite(cfg.op_r_step_m) && cfg.op_r_step_m > 0.0, "op_r_step_m",
            "must be > 0");
    require(cfg.aod_rays >= 2, "aod_rays", "must be >= 2");
    require(std::isfinite(cfg.aod_rho_min_m) && cfg.aod_rho_min_m > 0.0, "aod_rho_min_m",
            "must be > 0");
    require(std::isfinite(cfg.aod_rho_max_m) && cfg.aod_rho_max_m > cfg.aod_rho_min_m,
            "aod_rho_max_m", "must be > aod_rho_min_m");
    require(std::isfinite(cfg.aod_rho_step_m) && cfg.aod_rho_step_m > 0.0, "aod_rho_step_m",
            "must be > 0");
    require(std::isfinite(cfg.aod_max_vertex_gap_m) && cfg.aod_max_vertex_gap_m > 0.0,
            "aod_max_vertex_gap_m", "must be > 0");
    require(cfg.mc_trials_moments >= 1, "mc_trials_moments", "must be >= 1");
    require(cfg.mc_trials_op >= 1, "mc_trials_op", "must be >= 1");
    require(cfg.mc_samples_area >= 1, "mc_samples_area", "must be >= 1");
    require(cfg.mc_geometries >= 1, "mc_geometries", "must be >= 1");
    require(std::isfinite(cfg.trace_dt_s) && cfg.trace_dt_s > 0.0, "trace_dt_s", "must be > 0");
    require(std::isfinite(cfg.trace_duration_s) && cfg.trace_duration_s >= cfg.trace_dt_s,
            "trace_duration_s", "must be >= trace_dt_s");
    require(cfg.sinusoids_per_component >= 1, "sinusoids_per_component", "must be >= 1");
}

std::string resolved_config_lines(const ExperimentConfig& cfg, const std::string& prefix) {
    std::ostringstream os;
    const auto num = [&](const char* key, double v) {
        os << prefix << key << " = " << g9(v) << "\n";
    };
    const auto integer = [&](const char* key, long long v) {
        os << prefix << key << " = " << v << "\n";
    };
    num("m", cfg.m);
    num("omega", cfg.omega);
    num("c0_db", cfg.c0_db);
    num("d0_m", cfg.d0_m);
    num("du_m", cfg.du_m);
    num("n", cfg.n);
    num("gamma_t_db", cfg.gamma_t_db);
    num("gamma_thr_db", cfg.gamma_thr_db);
    num("xi_deg", cfg.xi_deg);
    num("half_width_m", cfg.half_width_m);
    num("half_height_m", cfg.half_height_m);
    integer("num_elements", cfg.num_elements);
    num("f_d_hz", cfg.f_d_hz);
    num("g_r", cfg.g_r);
    num("lambda_m", cfg.lambda_m);
    num("phi_deg", cfg.phi_deg);
    num("theta_deg", cfg.theta_deg);
    os << prefix << "bench1_combining = " << cfg.bench1_combining << "\n";
    os << prefix << "seed = " << cfg.seed << "\n";
    num("r_min_m", cfg.r_min_m);
    num("r_max_m", cfg.r_max_m);
    num("r_step_m", cfg.r_step_m);
    num("op_r_min_m", cfg.op_r_min_m);
    num("op_r_max_m", cfg.op_r_max_m);
    num("op_r_step_m", cfg.op_r_step_m);
    integer("aod_rays", cfg.aod_rays);
    num("aod_rho_min_m", cfg.aod_rho_min_m);
    num("aod_rho_max_m", cfg.aod_rho_max_m);
    num("aod_rho_step_m", cfg.aod_rho_step_m);
    num("aod_max_vertex_gap_m", cfg.aod_max_vertex_gap_m);
    integer("mc_trials_moments", cfg.mc_trials_moments);
    integer("mc_trials_op", cfg.mc_trials_op);
    integer("mc_samples_area", cfg.mc_samples_area);
    integer("mc_geometries", cfg.mc_geometries);
    num("trace_duration_s", cfg.trace_duration_s);
    num("trace_dt_s", cfg.trace_dt_s);
    integer("sinusoids_per_component", cfg.sinusoids_per_component);
    return os.str();
}

SphericalPosition position_at(const ExperimentConfig& cfg, double r) {
    return SphericalPosition{r, deg_to_rad(cfg.theta_deg), deg_to_rad(cfg.phi_deg)};
}

NakagamiParams nakagami_params(const ExperimentConfig& cfg) {
    return NakagamiParams{cfg.m, cfg.omega};
}

ConeAntenna cone_antenna(const ExperimentConfig& cfg) {
    return ConeAntenna{deg_to_rad(cfg.xi_deg)};
}

RisPanel ris_panel(const ExperimentConfig& cfg) {
    return RisPanel{cfg.half_width_m, cfg.half_height_m, cfg.num_elements};
}

RadioConfig radio_config(const ExperimentConfig& cfg) {
    return RadioConfig{db_to_linear(cfg.gamma_t_db), db_to_linear(cfg.gamma_thr_db),
                       tx_gain_directional(cfg.xi_deg), cfg.g_r};
}

PathLossParams path_loss_params(const ExperimentConfig& cfg) {
    return PathLossParams{db_to_linear(cfg.c0_db), cfg.d0_m, cfg.du_m, cfg.n};
}

BenchmarkGeometry benchmark_geometry(const ExperimentConfig& cfg) {
    return BenchmarkGeometry{cfg.lambda_m, deg_to_rad(45.0), cfg.du_m};
}

Bench1Combining bench1_combining_mode(const ExperimentConfig& cfg) {
    return (cfg.bench1_combining == "power_sum") ? Bench1Combining::PowerSum
                                                 : Bench1Combining::Coherent;
}

}  // namespace rislink
