#include "rislink/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "rislink/errors.hpp"
#include "rislink/mc_oracle.hpp"
#include "rislink/special.hpp"
#include "rislink/units.hpp"

namespace rislink {

namespace {

constexpr double kPi = std::numbers::pi;
const double kNaN = std::numeric_limits<double>::quiet_NaN();
const double kInf = std::numeric_limits<double>::infinity();

// Aggregate counts below ~30 make the Gaussian surrogate questionable; rows
// carry a note instead of failing.
constexpr int kSmallCountNote = 30;

std::string g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string e3(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string join_notes(const std::vector<std::string>& notes) {
    std::string out;
    for (const auto& n : notes) {
        if (!out.empty()) out += "; ";
        out += n;
    }
    return out;
}

void append_cell(std::string& line, double v) {
    line += ',';
    if (std::isfinite(v)) line += g9(v);
}

// Distance grid; the endpoint tolerance keeps r_max itself included despite
// accumulated representation error.
std::vector<double> distance_grid(double lo, double hi, double step) {
    std::vector<double> out;
    for (long long i = 0;; ++i) {
        const double r = lo + static_cast<double>(i) * step;
        if (r > hi + 1e-9) break;
        out.push_back(r);
    }
    return out;
}

double combined_path_loss(const ExperimentConfig& cfg, const FootprintEllipse& fp) {
    return ris_panel(cfg).element_area() / fp.area() * path_loss_ris_gn(path_loss_params(cfg));
}

}  // namespace

SnrRow compute_snr_row(const ExperimentConfig& cfg, double r) {
    SnrRow row;
    row.r = r;
    row.snr_db = row.bench1_db = row.bench2_db = row.spillover = kNaN;
    std::vector<std::string> notes;

    const SphericalPosition pos = position_at(cfg, r);
    const ConeAntenna cone = cone_antenna(cfg);
    const RisPanel panel = ris_panel(cfg);
    const RadioConfig radio = radio_config(cfg);
    const PathLossParams pl = path_loss_params(cfg);
    const NakagamiParams nak = nakagami_params(cfg);
    const BenchmarkGeometry bench = benchmark_geometry(cfg);

    try {
        row.bench1_db = linear_to_db(
            benchmark1_snr(pos, panel, radio, bench, pl, nak, bench1_combining_mode(cfg)));
    } catch (const Error& e) {
        notes.push_back(std::string("benchmark1: ") + e.what());
    }
    try {
        row.bench2_db = linear_to_db(benchmark2_snr(pos, cone, radio, bench));
    } catch (const Error& e) {
        notes.push_back(std::string("benchmark2: ") + e.what());
    }
    try {
        const FootprintEllipse fp = compute_footprint(pos, cone);
        const IlluminationResult il = spillover_fraction(fp, panel);
        row.spillover = il.spillover_fraction;
        row.illuminated_count = il.illuminated_count;
        row.case_tag = il.case_tag;
        row.has_case = true;
        if (il.illuminated_count == 0) {
            notes.push_back("proposed: no element illuminated, outage certain");
        } else {
            const double l0 = combined_path_loss(cfg, fp);
            const AggregateChannel agg =
                aggregate_moments(il.illuminated_count, nak, cfg.f_d_hz);
            row.snr_db = linear_to_db(average_snr(l0, radio, agg));
            if (il.illuminated_count < kSmallCountNote) {
                notes.push_back("clt_small_M=" + std::to_string(il.illuminated_count));
            }
        }
    } catch (const Error& e) {
        notes.push_back(std::string("proposed: ") + e.what());
    }
    row.diagnostics = join_notes(notes);
    return row;
}

std::vector<SnrRow> sweep_snr(const ExperimentConfig& cfg) {
    validate_config(cfg);
    std::vector<SnrRow> rows;
    for (double r : distance_grid(cfg.r_min_m, cfg.r_max_m, cfg.r_step_m)) {
        rows.push_back(compute_snr_row(cfg, r));
    }
    return rows;
}

std::string sweep_snr_csv(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "# rislink sweep-snr\n";
    os << resolved_config_lines(cfg, "# ");
    os << "r_m,snr_db_proposed,snr_db_benchmark1,snr_db_benchmark2,illuminated_count,"
          "spillover_fraction,case,diagnostics\n";
    for (const SnrRow& row : sweep_snr(cfg)) {
        std::string line = g9(row.r);
        append_cell(line, row.snr_db);
        append_cell(line, row.bench1_db);
        append_cell(line, row.bench2_db);
        line += ',';
        if (row.illuminated_count >= 0) line += std::to_string(row.illuminated_count);
        append_cell(line, row.spillover);
        line += ',';
        if (row.has_case) line += to_string(row.case_tag);
        line += ',';
        line += row.diagnostics;
        os << line << "\n";
    }
    return os.str();
}

OpRow compute_op_row(const ExperimentConfig& cfg, double r) {
    OpRow row;
    row.r = r;
    std::vector<std::string> notes;

    const auto op_variant = [&](double m, double theta_deg, const char* name) -> double {
        ExperimentConfig c2 = cfg;
        c2.m = m;
        c2.theta_deg = theta_deg;
        try {
            const SphericalPosition pos = position_at(c2, r);
            const FootprintEllipse fp = compute_footprint(pos, cone_antenna(c2));
            const IlluminationResult il = spillover_fraction(fp, ris_panel(c2));
            if (il.illuminated_count == 0) {
                notes.push_back(std::string(name) + ": no element illuminated, outage certain");
                return 1.0;
            }
            const double l0 = combined_path_loss(c2, fp);
            const double z = snr_threshold_z(radio_config(c2), l0);
            const AggregateChannel agg =
                aggregate_moments(il.illuminated_count, nakagami_params(c2), c2.f_d_hz);
            if (il.illuminated_count < kSmallCountNote) {
                notes.push_back(std::string(name) +
                                ": clt_small_M=" + std::to_string(il.illuminated_count));
            }
            return outage_probability(z, agg);
        } catch (const Error& e) {
            notes.push_back(std::string(name) + ": " + e.what());
            return kNaN;
        }
    };

    row.op_m3_t90 = op_variant(3.0, 90.0, "m3_t90");
    row.op_m1_t90 = op_variant(1.0, 90.0, "m1_t90");
    row.op_m3_t60 = op_variant(3.0, 60.0, "m3_t60");
    row.diagnostics = join_notes(notes);
    return row;
}

std::vector<OpRow> sweep_op(const ExperimentConfig& cfg) {
    validate_config(cfg);
    std::vector<OpRow> rows;
    for (double r : distance_grid(cfg.op_r_min_m, cfg.op_r_max_m, cfg.op_r_step_m)) {
        rows.push_back(compute_op_row(cfg, r));
    }
    return rows;
}

std::string sweep_op_csv(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "# rislink sweep-op\n";
    os << resolved_config_lines(cfg, "# ");
    os << "r_m,op_m3_t90,op_m1_t90,op_m3_t60,diagnostics\n";
    for (const OpRow& row : sweep_op(cfg)) {
        std::string line = g9(row.r);
        append_cell(line, row.op_m3_t90);
        append_cell(line, row.op_m1_t90);
        append_cell(line, row.op_m3_t60);
        line += ',';
        line += row.diagnostics;
        os << line << "\n";
    }
    return os.str();
}

double aod_at_ground_point(const ExperimentConfig& cfg, double x, double y, double theta) {
    if (!(theta > 0.0 && theta < kPi)) {
        throw InvalidArgument("aod_at_ground_point: theta must lie in (0, pi)");
    }
    const double rho = std::hypot(x, y);
    const double st = std::sin(theta);
    const double r = rho / st;
    const double phi = std::atan2(y, x);
    if (!(r > 0.0 && phi > 0.0 && phi < kPi)) return kInf;
    const SphericalPosition pos{r, theta, phi};
    try {
        const FootprintEllipse fp = compute_footprint(pos, cone_antenna(cfg));
        const IlluminationResult il = spillover_fraction(fp, ris_panel(cfg));
        if (il.illuminated_count == 0) return kInf;
        const double l0 = combined_path_loss(cfg, fp);
        const double z = snr_threshold_z(radio_config(cfg), l0);
        const AggregateChannel agg =
            aggregate_moments(il.illuminated_count, nakagami_params(cfg), cfg.f_d_hz);
        return average_outage_duration(z, agg);
    } catch (const Error&) {
        return kInf;
    }
}

namespace {

// One boundary crossing on a scan ray.
struct RayPoint {
    double rho;
    double aod;
};

using RayCrossings = std::vector<RayPoint>;

struct MinTracker {
    double aod = kInf;
    double x = 0.0;
    double y = 0.0;
};

class BoundaryScanner {
public:
    BoundaryScanner(const ExperimentConfig& cfg, double target_s, double theta)
        : cfg_(cfg), target_(target_s), theta_(theta) {}

    double eval(double rho, double phi) {
        const double x = rho * std::cos(phi);
        const double y = rho * std::sin(phi);
        const double a = aod_at_ground_point(cfg_, x, y, theta_);
        if (a < min_.aod) {
            min_.aod = a;
            min_.x = x;
            min_.y = y;
        }
        return a;
    }

    // Crossings of the (aod <= target) indicator along the ray, refined to
    // 1 mm in rho.
    RayCrossings scan(double phi) {
        RayCrossings out;
        double prev_rho = cfg_.aod_rho_min_m;
        bool prev_in = (eval(prev_rho, phi) <= target_);
        for (double rho = prev_rho + cfg_.aod_rho_step_m; rho <= cfg_.aod_rho_max_m + 1e-9;
             rho += cfg_.aod_rho_step_m) {
            const bool in = (eval(rho, phi) <= target_);
            if (in != prev_in) {
                double lo = prev_rho;
                double hi = rho;
                while (hi - lo > 1e-3) {
                    const double mid = 0.5 * (lo + hi);
                    if ((eval(mid, phi) <= target_) == prev_in) {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                const double rho_b = 0.5 * (lo + hi);
                out.push_back(RayPoint{rho_b, eval(rho_b, phi)});
            }
            prev_rho = rho;
            prev_in = in;
        }
        return out;
    }

    const MinTracker& min() const { return min_; }

private:
    const ExperimentConfig& cfg_;
    double target_;
    double theta_;
    MinTracker min_;
};

double crossing_distance(double phi_a, const RayPoint& a, double phi_b, const RayPoint& b) {
    const double ax = a.rho * std::cos(phi_a);
    const double ay = a.rho * std::sin(phi_a);
    const double bx = b.rho * std::cos(phi_b);
    const double by = b.rho * std::sin(phi_b);
    return std::hypot(ax - bx, ay - by);
}

bool needs_split(double phi_a, const RayCrossings& a, double phi_b, const RayCrossings& b,
                 double max_gap) {
    if (a.size() != b.size()) return !(a.empty() && b.empty());
    for (size_t j = 0; j < a.size(); ++j) {
        if (crossing_distance(phi_a, a[j], phi_b, b[j]) > max_gap) return true;
    }
    return false;
}

}  // namespace

BoundaryResult aod_boundary(const ExperimentConfig& cfg, double target_s, double theta) {
    validate_config(cfg);
    if (!(std::isfinite(target_s) && target_s > 0.0)) {
        throw InvalidArgument("aod_boundary: target_s must be > 0");
    }
    if (!(theta > 0.0 && theta < kPi)) {
        throw InvalidArgument("aod_boundary: theta must lie in (0, pi)");
    }

    BoundaryScanner scanner(cfg, target_s, theta);

    // Ray midpoints avoid the degenerate azimuths 0 and pi.
    std::vector<std::pair<double, RayCrossings>> rays;
    const int n_base = cfg.aod_rays;
    const auto base_phi = [&](int i) {
        return (static_cast<double>(i) + 0.5) * kPi / static_cast<double>(n_base);
    };

    constexpr int kMaxDepth = 12;
    const std::function<void(double, const RayCrossings&, double, const RayCrossings&, int)>
        refine = [&](double pa, const RayCrossings& ca, double pb, const RayCrossings& cb,
                     int depth) {
            if (depth < kMaxDepth && needs_split(pa, ca, pb, cb, cfg.aod_max_vertex_gap_m)) {
                const double pm = 0.5 * (pa + pb);
                const RayCrossings cm = scanner.scan(pm);
                refine(pa, ca, pm, cm, depth + 1);
                refine(pm, cm, pb, cb, depth + 1);
            } else {
                rays.emplace_back(pb, cb);
            }
        };

    RayCrossings first = scanner.scan(base_phi(0));
    rays.emplace_back(base_phi(0), first);
    for (int i = 1; i < n_base; ++i) {
        const auto prev = rays.back();
        const double pb = base_phi(i);
        const RayCrossings cb = scanner.scan(pb);
        refine(prev.first, prev.second, pb, cb, 0);
    }

    // Chains of same-index crossings across consecutive rays form segments;
    // a change in crossing count breaks every chain.
    BoundaryResult res;
    res.min_aod_seen = scanner.min().aod;
    res.min_x = scanner.min().x;
    res.min_y = scanner.min().y;

    int next_segment = 0;
    std::vector<int> chain_ids;
    size_t prev_count = 0;
    std::vector<std::vector<BoundaryVertex>> chains;
    std::vector<std::vector<BoundaryVertex>> finished;

    const auto flush_chains = [&]() {
        for (auto& c : chains) {
            if (!c.empty()) finished.push_back(std::move(c));
        }
        chains.clear();
        chain_ids.clear();
    };

    for (const auto& [phi, crossings] : rays) {
        if (crossings.size() != prev_count) {
            flush_chains();
            chains.resize(crossings.size());
            chain_ids.resize(crossings.size());
            for (size_t j = 0; j < crossings.size(); ++j) chain_ids[j] = next_segment++;
            prev_count = crossings.size();
        }
        for (size_t j = 0; j < crossings.size(); ++j) {
            const double x = crossings[j].rho * std::cos(phi);
            const double y = crossings[j].rho * std::sin(phi);
            chains[j].push_back(BoundaryVertex{x, y, crossings[j].aod, chain_ids[j]});
        }
    }
    flush_chains();

    for (const auto& c : finished) {
        res.vertices.insert(res.vertices.end(), c.begin(), c.end());
    }
    if (res.vertices.empty()) {
        throw EmptyRegion("aod_boundary: no duration-target boundary in the scan window for "
                          "target " +
                          g9(target_s) + " s; minimum duration seen " + g9(res.min_aod_seen) +
                          " s at (" + g9(res.min_x) + ", " + g9(res.min_y) + ")");
    }
    return res;
}

std::string aod_boundary_csv(const ExperimentConfig& cfg, double target_s, double theta) {
    std::ostringstream os;
    os << "# rislink aod-boundary\n";
    os << resolved_config_lines(cfg, "# ");
    os << "# target_s = " << g9(target_s) << "\n";
    os << "# theta_deg = " << g9(rad_to_deg(theta)) << "\n";
    os << "x_m,y_m,aod_s,segment\n";
    const BoundaryResult res = aod_boundary(cfg, target_s, theta);
    for (const BoundaryVertex& v : res.vertices) {
        os << g9(v.x) << ',' << g9(v.y) << ',' << g9(v.aod_s) << ',' << v.segment << "\n";
    }
    return os.str();
}

CheckRow check_against(const std::string& name, double measured, double tolerance,
                       const std::string& detail) {
    CheckRow row;
    row.name = name;
    row.measured = measured;
    row.tolerance = tolerance;
    row.detail = detail;
    row.pass = std::isfinite(measured) && std::abs(measured) <= tolerance;
    return row;
}

namespace {

void moments_checks(const ExperimentConfig& cfg, std::vector<CheckRow>& rows) {
    const double m_values[] = {1.0, 3.0};
    const int counts[] = {50, 100, 400, 800};
    uint64_t combo = 0;
    for (double m : m_values) {
        for (int M : counts) {
            const NakagamiParams nak{m, cfg.omega};
            const AggregateChannel ana = aggregate_moments(M, nak, cfg.f_d_hz);
            const MomentEstimate est =
                empirical_aggregate(M, nak, cfg.mc_trials_moments,
                                    derive_stream_seed(cfg.seed, 100 + combo));
            const std::string suffix =
                "_m" + std::to_string(static_cast<int>(m)) + "_M" + std::to_string(M);

            const double mean_err = std::abs(est.mean - ana.mean) / ana.mean;
            const double mean_tol = std::max(0.005, 2.0 * est.mean_ci / ana.mean);
            rows.push_back(check_against("agg_mean" + suffix, mean_err, mean_tol,
                                         "analytic=" + g9(ana.mean) + " empirical=" +
                                             g9(est.mean) + " ci=" + g9(est.mean_ci)));

            const double var_err = std::abs(est.variance - ana.variance) / ana.variance;
            const double var_tol = std::max(0.03, 2.0 * est.variance_ci / ana.variance);
            rows.push_back(check_against("agg_var" + suffix, var_err, var_tol,
                                         "analytic=" + g9(ana.variance) + " empirical=" +
                                             g9(est.variance) + " ci=" + g9(est.variance_ci)));

            if (M >= 100) {
                rows.push_back(check_against("agg_skew" + suffix, est.skewness, 0.1,
                                             "near-normality of the aggregate sum"));
            }
            ++combo;
        }
    }

    const NakagamiParams nak3{3.0, cfg.omega};
    const AggregateChannel ana1 = aggregate_moments(1, nak3, cfg.f_d_hz);
    const MomentEstimate est1 = empirical_aggregate(
        1, nak3, cfg.mc_trials_moments, derive_stream_seed(cfg.seed, 199));
    rows.push_back(check_against(
        "element_mean_m3", std::abs(est1.mean - ana1.mean) / ana1.mean,
        std::max(0.003, 2.0 * est1.mean_ci / ana1.mean),
        "analytic=" + g9(ana1.mean) + " empirical=" + g9(est1.mean) + " ci=" + g9(est1.mean_ci)));
}

void outage_checks(const ExperimentConfig& cfg, std::vector<CheckRow>& rows) {
    const int M = 800;
    const NakagamiParams nak{3.0, cfg.omega};
    const AggregateChannel agg = aggregate_moments(M, nak, cfg.f_d_hz);
    const double sd = std::sqrt(agg.variance);
    const std::vector<double> zs = {agg.mean - 2.0 * sd, agg.mean - sd, agg.mean,
                                    std::max(agg.mean - 8.0 * sd, 0.0)};
    const auto counts = empirical_outage_counts(zs, M, nak, cfg.mc_trials_op,
                                                derive_stream_seed(cfg.seed, 200));
    const char* names[] = {"op_minus2sigma", "op_minus1sigma", "op_at_mean"};
    for (int i = 0; i < 3; ++i) {
        const double ana = outage_probability(zs[static_cast<size_t>(i)], agg);
        const double emp = counts[static_cast<size_t>(i)].estimate();
        const double tol =
            std::max(0.05 * ana, 2.0 * counts[static_cast<size_t>(i)].ci_half_width());
        rows.push_back(check_against(names[i], std::abs(emp - ana), tol,
                                     "analytic=" + g9(ana) + " empirical=" + g9(emp) + " events=" +
                                         std::to_string(counts[static_cast<size_t>(i)].events)));
    }
    const double ana_deep = outage_probability(zs[3], agg);
    rows.push_back(check_against("op_deep_tail",
                                 static_cast<double>(counts[3].events), 0.0,
                                 "analytic=" + e3(ana_deep) + " in " +
                                     std::to_string(cfg.mc_trials_op) +
                                     " trials; zero events expected"));
}

void area_checks(const ExperimentConfig& cfg, std::vector<CheckRow>& rows) {
    const RisPanel panel = ris_panel(cfg);
    Xoshiro256pp rng(derive_stream_seed(cfg.seed, 300));
    int ok = 0;
    double worst = 0.0;
    int case_counts[5] = {0, 0, 0, 0, 0};
    for (int gidx = 0; gidx < cfg.mc_geometries; ++gidx) {
        const double a = std::exp(std::log(0.2) +
                                  (std::log(4.0) - std::log(0.2)) * rng.uniform01());
        const double b = a * (0.12 + 0.88 * rng.uniform01());
        const double psi = kPi * rng.uniform01();
        const FootprintEllipse fp{a, b, psi};
        const IlluminationResult il = spillover_fraction(fp, panel);
        const EstimateCI mc =
            mc_area_overlap(fp, panel, cfg.mc_samples_area,
                            derive_stream_seed(cfg.seed, 400 + static_cast<uint64_t>(gidx)));
        const double err = std::abs(il.spillover_fraction - mc.value);
        worst = std::max(worst, err);
        if (err <= 2e-3) ++ok;
        ++case_counts[static_cast<int>(il.case_tag)];
    }
    const double fail_frac =
        1.0 - static_cast<double>(ok) / static_cast<double>(cfg.mc_geometries);
    rows.push_back(check_against(
        "area_overlap_batch", fail_frac, 0.01,
        "within 2e-3: " + std::to_string(ok) + "/" + std::to_string(cfg.mc_geometries) +
            " worst=" + e3(worst) + " cases C1..C5: " + std::to_string(case_counts[0]) + "/" +
            std::to_string(case_counts[1]) + "/" + std::to_string(case_counts[2]) + "/" +
            std::to_string(case_counts[3]) + "/" + std::to_string(case_counts[4])));
}

void pathloss_checks(const ExperimentConfig& cfg, std::vector<CheckRow>& rows) {
    const ConeAntenna cone = cone_antenna(cfg);
    const RisPanel panel = ris_panel(cfg);
    Xoshiro256pp rng(derive_stream_seed(cfg.seed, 500));
    double worst = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const double r = std::exp(std::log(1.0) + std::log(200.0) * rng.uniform01());
        const double theta = 0.2 + (kPi - 0.4) * rng.uniform01();
        const double phi = 0.05 + (kPi - 0.1) * rng.uniform01();
        const SphericalPosition pos{r, theta, phi};
        const double la = path_loss_uav_ris(pos, cone, panel);
        const double lb = path_loss_uav_ris_expanded(pos, cone, panel);
        worst = std::max(worst, std::abs(la - lb) / la);
    }
    rows.push_back(check_against("pathloss_consistency", worst, 1e-12,
                                 "max relative gap between the two groupings over " +
                                     std::to_string(n) + " positions"));
}

void trace_checks(const ExperimentConfig& cfg, std::vector<CheckRow>& rows) {
    const int M = 200;
    const NakagamiParams nak{3.0, cfg.omega};
    const AggregateChannel agg = aggregate_moments(M, nak, cfg.f_d_hz);
    const double sd = std::sqrt(agg.variance);
    const FadingTrace trace =
        fading_timeseries(M, nak, cfg.f_d_hz, cfg.trace_duration_s, cfg.trace_dt_s,
                          derive_stream_seed(cfg.seed, 600), cfg.sinusoids_per_component);
    const struct {
        const char* tag;
        double z;
    } levels[] = {{"minus1sigma", agg.mean - sd}, {"at_mean", agg.mean},
                  {"plus1sigma", agg.mean + sd}};
    for (const auto& lvl : levels) {
        const double ana_lcr = level_crossing_rate(lvl.z, agg);
        const double ana_aod = average_outage_duration(lvl.z, agg);
        try {
            const CrossingStats cs = empirical_lcr_aod(trace, lvl.z);
            rows.push_back(check_against(
                std::string("trace_lcr_") + lvl.tag,
                std::abs(cs.crossings_per_second - ana_lcr) / ana_lcr, 0.15,
                "analytic=" + g9(ana_lcr) + " empirical=" + g9(cs.crossings_per_second) +
                    " crossings=" + std::to_string(cs.crossings)));
            rows.push_back(check_against(
                std::string("trace_aod_") + lvl.tag,
                std::abs(cs.mean_sojourn_s - ana_aod) / ana_aod, 0.15,
                "analytic=" + g9(ana_aod) + " empirical=" + g9(cs.mean_sojourn_s)));
        } catch (const InsufficientCrossings& e) {
            rows.push_back(check_against(std::string("trace_lcr_") + lvl.tag, kNaN, 0.15,
                                         e.what()));
            rows.push_back(check_against(std::string("trace_aod_") + lvl.tag, kNaN, 0.15,
                                         e.what()));
        }
    }
}

}  // namespace

std::vector<CheckRow> run_validation(const ExperimentConfig& cfg) {
    validate_config(cfg);
    std::vector<CheckRow> rows;
    moments_checks(cfg, rows);
    outage_checks(cfg, rows);
    area_checks(cfg, rows);
    pathloss_checks(cfg, rows);
    trace_checks(cfg, rows);
    return rows;
}

std::string validation_report(const std::vector<CheckRow>& rows, const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "# rislink validate\n";
    os << resolved_config_lines(cfg, "# ");
    size_t passed = 0;
    for (const CheckRow& row : rows) {
        char head[96];
        std::snprintf(head, sizeof head, "%s %-24s measured %-11s tol %-11s ",
                      row.pass ? "PASS" : "FAIL", row.name.c_str(),
                      std::isfinite(row.measured) ? e3(row.measured).c_str() : "n/a",
                      e3(row.tolerance).c_str());
        os << head << "| " << row.detail << "\n";
        if (row.pass) ++passed;
    }
    os << "== " << passed << "/" << rows.size() << " checks passed ==\n";
    return os.str();
}

}  // namespace rislink
