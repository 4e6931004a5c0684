#pragma once

#include <cstdint>
#include <vector>

#include "rislink/geometry.hpp"
#include "rislink/rng.hpp"
#include "rislink/stats.hpp"

namespace rislink {

// Serial runs the chunk loop on the calling thread; Parallel distributes
// chunks across OpenMP threads.  Both merge chunk results in chunk order, so
// the output is bit-identical between the two and across thread counts.
enum class ExecPolicy { Serial, Parallel };

// One draw of the per-element fading amplitude.
double sample_nakagami(const NakagamiParams& nak, Xoshiro256pp& rng);

struct MomentEstimate {
    double mean;
    double variance;
    double skewness;
    double mean_ci;      // 95% half-width
    double variance_ci;  // 95% half-width
    int64_t trials;
    std::vector<double> samples;  // filled only when requested
};

// Sample moments of the sum of M per-element amplitudes.
MomentEstimate empirical_aggregate(int illuminated_count, const NakagamiParams& nak,
                                   int64_t trials, uint64_t seed,
                                   ExecPolicy policy = ExecPolicy::Parallel,
                                   bool keep_samples = false);

struct OutageCount {
    double z;
    int64_t events;
    int64_t trials;

    double estimate() const { return static_cast<double>(events) / static_cast<double>(trials); }
    // 95% binomial half-width (normal approximation).
    double ci_half_width() const;
};

// Outage counts for several thresholds out of one shared sampling pass.
std::vector<OutageCount> empirical_outage_counts(const std::vector<double>& thresholds,
                                                 int illuminated_count,
                                                 const NakagamiParams& nak, int64_t trials,
                                                 uint64_t seed,
                                                 ExecPolicy policy = ExecPolicy::Parallel);

struct EstimateCI {
    double value;
    double ci_half_width;
};

// Outage probability estimate; throws InsufficientEvents when fewer than 100
// outage events were observed.
EstimateCI empirical_op(double z, int illuminated_count, const NakagamiParams& nak,
                        int64_t trials, uint64_t seed,
                        ExecPolicy policy = ExecPolicy::Parallel);

// Fraction of footprint area outside the panel, by uniform sampling inside
// the ellipse.
EstimateCI mc_area_overlap(const FootprintEllipse& fp, const RisPanel& panel, int64_t samples,
                           uint64_t seed, ExecPolicy policy = ExecPolicy::Parallel);

struct FadingTrace {
    double dt;
    double doppler_hz;
    std::vector<double> samples;
};

// Aggregate amplitude across illuminated_count elements as a time series,
// each element synthesised from 2m Gaussian sum-of-sinusoids components.
// Requires integer m.
FadingTrace fading_timeseries(int illuminated_count, const NakagamiParams& nak,
                              double doppler_hz, double duration_s, double dt_s, uint64_t seed,
                              int sinusoids_per_component,
                              ExecPolicy policy = ExecPolicy::Parallel);

// One Gaussian sum-of-sinusoids component, for autocorrelation checks.
std::vector<double> synth_gaussian_component(double doppler_hz, double variance,
                                             double duration_s, double dt_s,
                                             int sinusoids, uint64_t stream_seed);

struct CrossingStats {
    double crossings_per_second;
    double mean_sojourn_s;
    int64_t crossings;
    double fraction_below;
};

// Counts downward crossings of level z and the mean time spent below it.
// Throws InsufficientCrossings when fewer than 100 crossings occurred.
CrossingStats empirical_lcr_aod(const FadingTrace& trace, double z);

}  // namespace rislink
