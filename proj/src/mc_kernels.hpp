#pragma once

#include <cstdint>

namespace rislink::kernels {

// All estimators consume randomness in fixed-size chunks seeded
// independently, so results do not depend on how chunks are scheduled.
inline constexpr int64_t kChunkTrials = 65536;

struct MomentPartial {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    double s4 = 0.0;
    int64_t n = 0;
};

// Draws n_trials aggregate amplitudes (sum of M per-element draws) and
// returns their raw power sums.  samples_out, when non-null, receives the
// individual sums.
MomentPartial aggregate_chunk(int illuminated_count, double m, double omega, int64_t n_trials,
                              uint64_t chunk_seed, double* samples_out);

// Same sampling; increments counts[i] for every trial whose sum is <= zs[i].
void outage_chunk(int illuminated_count, double m, double omega, int64_t n_trials,
                  uint64_t chunk_seed, const double* zs, int nz, int64_t* counts);

// Uniform points inside the rotated ellipse; returns how many fall outside
// the centred half_w x half_h rectangle.
int64_t area_outside_chunk(double semi_major, double semi_minor, double rotation,
                           double half_w, double half_h, int64_t n_samples,
                           uint64_t chunk_seed);

// Accumulates one Gaussian sum-of-sinusoids component onto out[0..n_steps).
void gaussian_component_accum(double doppler_hz, double variance, int64_t n_steps, double dt,
                              int sinusoids, uint64_t stream_seed, double* out);

// Adds the fading amplitude traces of elements [elem_begin, elem_end) onto
// acc[0..n_steps).  m_int complex Gaussian pairs per element.
void fading_block(int elem_begin, int elem_end, int m_int, double omega, double doppler_hz,
                  int64_t n_steps, double dt, int sinusoids, uint64_t seed, double* acc);

}  // namespace rislink::kernels
