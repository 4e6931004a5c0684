#pragma once

#include <string>
#include <vector>

#include "rislink/config.hpp"

namespace rislink {

// One distance point of the SNR sweep.  Columns that could not be evaluated
// hold NaN (or -1 for the count, false for has_case) and render as empty
// cells; diagnostics says why.
struct SnrRow {
    double r;
    double snr_db;
    double bench1_db;
    double bench2_db;
    double spillover;
    int illuminated_count = -1;
    bool has_case = false;
    CaseTag case_tag = CaseTag::C1;
    std::string diagnostics;
};

// Rows are computed independently; recomputing one in isolation reproduces
// the sweep's row exactly.
SnrRow compute_snr_row(const ExperimentConfig& cfg, double r);
std::vector<SnrRow> sweep_snr(const ExperimentConfig& cfg);
std::string sweep_snr_csv(const ExperimentConfig& cfg);

// Outage probability sweep over three fading/elevation variants.  A variant
// that cannot be evaluated at some distance gets probability 1 when nothing
// is illuminated, with a diagnostics note.
struct OpRow {
    double r;
    double op_m3_t90 = 1.0;
    double op_m1_t90 = 1.0;
    double op_m3_t60 = 1.0;
    std::string diagnostics;
};

OpRow compute_op_row(const ExperimentConfig& cfg, double r);
std::vector<OpRow> sweep_op(const ExperimentConfig& cfg);
std::string sweep_op_csv(const ExperimentConfig& cfg);

// Mean outage duration for a hover point given by its horizontal projection
// (x, y) and the elevation angle theta; +inf when nothing is illuminated.
double aod_at_ground_point(const ExperimentConfig& cfg, double x, double y, double theta);

struct BoundaryVertex {
    double x;
    double y;
    double aod_s;
    int segment;  // consecutive vertices share a segment id
};

struct BoundaryResult {
    std::vector<BoundaryVertex> vertices;
    double min_aod_seen;
    double min_x;
    double min_y;
};

// Polyline where the mean outage duration equals target_s, traced by radial
// scanning over azimuth with adaptive ray refinement.  Throws EmptyRegion
// when no scanned point meets the target; the message carries the best value
// seen.
BoundaryResult aod_boundary(const ExperimentConfig& cfg, double target_s, double theta);
std::string aod_boundary_csv(const ExperimentConfig& cfg, double target_s, double theta);

// One line of the validation report.  measured and tolerance are in the
// units named by detail.
struct CheckRow {
    std::string name;
    bool pass;
    double measured;
    double tolerance;
    std::string detail;
};

// Builds a row that passes when |measured| <= tolerance.
CheckRow check_against(const std::string& name, double measured, double tolerance,
                       const std::string& detail);

// Cross-checks every closed-form quantity that has a sampling estimator
// against that estimator.
std::vector<CheckRow> run_validation(const ExperimentConfig& cfg);

// Fixed-width report; body depends only on cfg, never on wall time.
std::string validation_report(const std::vector<CheckRow>& rows, const ExperimentConfig& cfg);

}  // namespace rislink
