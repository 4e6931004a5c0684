#pragma once

namespace rislink {

// Per-element small-scale fading: amplitude ~ Nakagami(m, omega) where omega
// is the mean square.
struct NakagamiParams {
    double m = 3.0;
    double omega = 1.0;

    void validate() const;
};

// Gaussian surrogate for the sum of illuminated element amplitudes, with the
// fading parameters and Doppler spread it was built from.
struct AggregateChannel {
    int illuminated_count;
    double mean;
    double variance;
    NakagamiParams nak;
    double doppler_hz;
};

// Mean and variance of the aggregate amplitude over M illuminated elements.
// M must be >= 1.
AggregateChannel aggregate_moments(int illuminated_count, const NakagamiParams& nak,
                                   double doppler_hz);

// Probability that the aggregate amplitude falls below z.
double outage_probability(double z, const AggregateChannel& agg);

// Rate (per second) of downward crossings of level z.
double level_crossing_rate(double z, const AggregateChannel& agg);

// Mean time (seconds) the amplitude stays below z once it crosses.  Evaluated
// in scaled-erfc form so it stays finite far above the mean, where the plain
// ratio of outage probability to crossing rate is 0/0 in floating point.
double average_outage_duration(double z, const AggregateChannel& agg);

}  // namespace rislink
