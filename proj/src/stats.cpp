#include "rislink/stats.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rislink/errors.hpp"
#include "rislink/special.hpp"

namespace rislink {

void NakagamiParams::validate() const {
    if (!(std::isfinite(m) && m >= 0.5)) {
        throw InvalidArgument("NakagamiParams: m must be >= 0.5, got " + std::to_string(m));
    }
    if (!(std::isfinite(omega) && omega > 0.0)) {
        throw InvalidArgument("NakagamiParams: omega must be > 0, got " + std::to_string(omega));
    }
}

AggregateChannel aggregate_moments(int illuminated_count, const NakagamiParams& nak,
                                   double doppler_hz) {
    nak.validate();
    if (illuminated_count < 1) {
        throw InvalidArgument("aggregate_moments: illuminated_count must be >= 1, got " +
                              std::to_string(illuminated_count));
    }
    if (!(std::isfinite(doppler_hz) && doppler_hz > 0.0)) {
        throw InvalidArgument("aggregate_moments: doppler_hz must be > 0, got " +
                              std::to_string(doppler_hz));
    }
    const double g = gamma_half_ratio(nak.m);
    const double mean = illuminated_count * g * std::sqrt(nak.omega / nak.m);
    const double variance = illuminated_count * nak.omega * (1.0 - g * g / nak.m);
    return AggregateChannel{illuminated_count, mean, variance, nak, doppler_hz};
}

double outage_probability(double z, const AggregateChannel& agg) {
    if (!(z >= 0.0)) {
        throw InvalidArgument("outage_probability: z must be >= 0, got " + std::to_string(z));
    }
    // Complementary form; accurate on both sides of the mean and exact 0.5
    // at z == mean.
    return 0.5 * std::erfc((agg.mean - z) / std::sqrt(2.0 * agg.variance));
}

double level_crossing_rate(double z, const AggregateChannel& agg) {
    if (!(z >= 0.0)) {
        throw InvalidArgument("level_crossing_rate: z must be >= 0, got " + std::to_string(z));
    }
    const double dev = z - agg.mean;
    const double density =
        std::exp(-dev * dev / (2.0 * agg.variance)) / std::sqrt(2.0 * std::numbers::pi * agg.variance);
    // RMS envelope-derivative rate of the aggregate process.
    const double sigma_dot = std::numbers::pi * agg.doppler_hz *
                             std::sqrt(agg.illuminated_count * agg.nak.omega / agg.nak.m);
    return density * sigma_dot / std::sqrt(2.0 * std::numbers::pi);
}

double average_outage_duration(double z, const AggregateChannel& agg) {
    if (!(z >= 0.0)) {
        throw InvalidArgument("average_outage_duration: z must be >= 0, got " +
                              std::to_string(z));
    }
    // Equals outage probability over crossing rate, with the shared Gaussian
    // factor cancelled analytically so the far-above-mean limit is +inf
    // instead of 0/0.
    const double x = (agg.mean - z) / std::sqrt(2.0 * agg.variance);
    return erfcx(x) * std::sqrt(agg.nak.m * agg.variance) /
           (agg.doppler_hz * std::sqrt(agg.illuminated_count * agg.nak.omega));
}

}  // namespace rislink
