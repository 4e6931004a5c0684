#include "rislink/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mc_kernels.hpp"
#include "rislink/errors.hpp"

namespace rislink {

namespace {

// Domain tags decorrelate the chunk seed streams of the different
// estimators for a shared user seed.
constexpr uint64_t kTagMoments = 0x4d4f4d454e545331ULL;
constexpr uint64_t kTagOutage = 0x4f55544147453131ULL;
constexpr uint64_t kTagArea = 0x4152454153414d50ULL;
constexpr uint64_t kTagFading = 0x4641444554524143ULL;

int64_t num_chunks(int64_t trials) {
    return (trials + kernels::kChunkTrials - 1) / kernels::kChunkTrials;
}

int64_t chunk_size(int64_t trials, int64_t chunk) {
    return std::min(kernels::kChunkTrials, trials - chunk * kernels::kChunkTrials);
}

void check_common(int illuminated_count, const NakagamiParams& nak, int64_t trials) {
    nak.validate();
    if (illuminated_count < 1) {
        throw InvalidArgument("sampler: illuminated_count must be >= 1, got " +
                              std::to_string(illuminated_count));
    }
    if (trials < 1) {
        throw InvalidArgument("sampler: trials must be >= 1, got " + std::to_string(trials));
    }
}

}  // namespace

double sample_nakagami(const NakagamiParams& nak, Xoshiro256pp& rng) {
    nak.validate();
    const double scale = nak.omega / nak.m;
    if (nak.m == std::floor(nak.m) && nak.m >= 1.0 && nak.m <= 64.0) {
        const int mi = static_cast<int>(nak.m);
        double u = rng.uniform01();
        for (int j = 1; j < mi; ++j) u *= rng.uniform01();
        if (u == 0.0) u = 0x1.0p-53;
        return std::sqrt(-scale * std::log(u));
    }
    // Non-integer m: square root of a Gamma(m) variate, Marsaglia-Tsang.
    const double d0 = std::max(nak.m, 1.0) - 1.0 / 3.0;
    const double c0 = 1.0 / std::sqrt(9.0 * d0);
    for (;;) {
        double n1;
        do {
            const double a = 2.0 * rng.uniform01() - 1.0;
            const double b = 2.0 * rng.uniform01() - 1.0;
            const double s = a * a + b * b;
            if (s >= 1.0 || s == 0.0) continue;
            n1 = a * std::sqrt(-2.0 * std::log(s) / s);
            break;
        } while (true);
        double v = 1.0 + c0 * n1;
        if (v <= 0.0) continue;
        v = v * v * v;
        const double u = rng.uniform01();
        const double x2 = n1 * n1;
        double g = -1.0;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            g = d0 * v;
        } else if (u > 0.0 && std::log(u) < 0.5 * x2 + d0 * (1.0 - v + std::log(v))) {
            g = d0 * v;
        }
        if (g < 0.0) continue;
        if (nak.m < 1.0) {
            double ub = rng.uniform01();
            if (ub == 0.0) ub = 0x1.0p-53;
            g *= std::pow(ub, 1.0 / nak.m);
        }
        return std::sqrt(scale * g);
    }
}

double OutageCount::ci_half_width() const {
    const double p = estimate();
    return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

MomentEstimate empirical_aggregate(int illuminated_count, const NakagamiParams& nak,
                                   int64_t trials, uint64_t seed, ExecPolicy policy,
                                   bool keep_samples) {
    check_common(illuminated_count, nak, trials);
    const int64_t nc = num_chunks(trials);
    std::vector<kernels::MomentPartial> partials(static_cast<size_t>(nc));
    MomentEstimate out;
    out.samples.resize(keep_samples ? static_cast<size_t>(trials) : 0);
    double* samples = keep_samples ? out.samples.data() : nullptr;

    const bool par = (policy == ExecPolicy::Parallel);
#pragma omp parallel for schedule(dynamic, 1) if (par)
    for (int64_t c = 0; c < nc; ++c) {
        double* sout = samples ? samples + c * kernels::kChunkTrials : nullptr;
        partials[static_cast<size_t>(c)] =
            kernels::aggregate_chunk(illuminated_count, nak.m, nak.omega, chunk_size(trials, c),
                                     derive_stream_seed(seed ^ kTagMoments, c), sout);
    }

    // Chunk partials merge in index order, so the totals do not depend on
    // scheduling.
    kernels::MomentPartial tot;
    for (const auto& p : partials) {
        tot.s1 += p.s1;
        tot.s2 += p.s2;
        tot.s3 += p.s3;
        tot.s4 += p.s4;
        tot.n += p.n;
    }
    const double n = static_cast<double>(tot.n);
    const double mean = tot.s1 / n;
    const double m2 = std::max(tot.s2 / n - mean * mean, 0.0);
    const double m3 = tot.s3 / n - 3.0 * mean * tot.s2 / n + 2.0 * mean * mean * mean;
    const double m4 = tot.s4 / n - 4.0 * mean * tot.s3 / n +
                      6.0 * mean * mean * tot.s2 / n - 3.0 * mean * mean * mean * mean;
    out.mean = mean;
    out.variance = m2 * n / (n - 1.0);
    out.skewness = (m2 > 0.0) ? m3 / std::pow(m2, 1.5) : 0.0;
    out.mean_ci = 1.96 * std::sqrt(m2 / n);
    out.variance_ci = 1.96 * std::sqrt(std::max(m4 - m2 * m2, 0.0) / n);
    out.trials = tot.n;
    return out;
}

std::vector<OutageCount> empirical_outage_counts(const std::vector<double>& thresholds,
                                                 int illuminated_count,
                                                 const NakagamiParams& nak, int64_t trials,
                                                 uint64_t seed, ExecPolicy policy) {
    check_common(illuminated_count, nak, trials);
    if (thresholds.empty()) {
        throw InvalidArgument("empirical_outage_counts: need at least one threshold");
    }
    for (double z : thresholds) {
        if (!(z >= 0.0)) {
            throw InvalidArgument("empirical_outage_counts: thresholds must be >= 0");
        }
    }
    const int nz = static_cast<int>(thresholds.size());
    const int64_t nc = num_chunks(trials);
    std::vector<int64_t> counts(static_cast<size_t>(nc) * nz, 0);

    const bool par = (policy == ExecPolicy::Parallel);
#pragma omp parallel for schedule(dynamic, 1) if (par)
    for (int64_t c = 0; c < nc; ++c) {
        kernels::outage_chunk(illuminated_count, nak.m, nak.omega, chunk_size(trials, c),
                              derive_stream_seed(seed ^ kTagOutage, c), thresholds.data(), nz,
                              counts.data() + c * nz);
    }

    std::vector<OutageCount> out(thresholds.size());
    for (int i = 0; i < nz; ++i) {
        int64_t events = 0;
        for (int64_t c = 0; c < nc; ++c) events += counts[static_cast<size_t>(c) * nz + i];
        out[static_cast<size_t>(i)] = OutageCount{thresholds[static_cast<size_t>(i)], events, trials};
    }
    return out;
}

EstimateCI empirical_op(double z, int illuminated_count, const NakagamiParams& nak,
                        int64_t trials, uint64_t seed, ExecPolicy policy) {
    const auto counts = empirical_outage_counts({z}, illuminated_count, nak, trials, seed, policy);
    const OutageCount& c = counts.front();
    if (c.events < 100) {
        throw InsufficientEvents("empirical_op: only " + std::to_string(c.events) +
                                 " outage events in " + std::to_string(trials) +
                                 " trials at z = " + std::to_string(z));
    }
    return EstimateCI{c.estimate(), c.ci_half_width()};
}

EstimateCI mc_area_overlap(const FootprintEllipse& fp, const RisPanel& panel, int64_t samples,
                           uint64_t seed, ExecPolicy policy) {
    panel.validate();
    if (samples < 1) {
        throw InvalidArgument("mc_area_overlap: samples must be >= 1");
    }
    if (!(fp.semi_major > 0.0 && fp.semi_minor > 0.0)) {
        throw DegenerateFootprint("mc_area_overlap: footprint axes must be > 0");
    }
    const int64_t nc = num_chunks(samples);
    std::vector<int64_t> outside(static_cast<size_t>(nc), 0);

    const bool par = (policy == ExecPolicy::Parallel);
#pragma omp parallel for schedule(dynamic, 1) if (par)
    for (int64_t c = 0; c < nc; ++c) {
        outside[static_cast<size_t>(c)] = kernels::area_outside_chunk(
            fp.semi_major, fp.semi_minor, fp.rotation, panel.half_width, panel.half_height,
            chunk_size(samples, c), derive_stream_seed(seed ^ kTagArea, c));
    }
    int64_t total = 0;
    for (int64_t v : outside) total += v;
    const double p = static_cast<double>(total) / static_cast<double>(samples);
    return EstimateCI{p, 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
}

std::vector<double> synth_gaussian_component(double doppler_hz, double variance,
                                             double duration_s, double dt_s, int sinusoids,
                                             uint64_t stream_seed) {
    if (!(doppler_hz > 0.0 && variance > 0.0 && duration_s > 0.0 && dt_s > 0.0 &&
          sinusoids >= 1)) {
        throw InvalidArgument("synth_gaussian_component: all parameters must be > 0");
    }
    const int64_t n_steps = static_cast<int64_t>(std::llround(duration_s / dt_s)) + 1;
    std::vector<double> out(static_cast<size_t>(n_steps), 0.0);
    kernels::gaussian_component_accum(doppler_hz, variance, n_steps, dt_s, sinusoids,
                                      stream_seed, out.data());
    return out;
}

FadingTrace fading_timeseries(int illuminated_count, const NakagamiParams& nak,
                              double doppler_hz, double duration_s, double dt_s, uint64_t seed,
                              int sinusoids_per_component, ExecPolicy policy) {
    nak.validate();
    if (illuminated_count < 1) {
        throw InvalidArgument("fading_timeseries: illuminated_count must be >= 1");
    }
    const double mr = std::round(nak.m);
    if (!(std::abs(nak.m - mr) < 1e-9 && mr >= 1.0 && mr <= 64.0)) {
        throw InvalidArgument("fading_timeseries: m must be a positive integer (<= 64), got " +
                              std::to_string(nak.m));
    }
    if (!(doppler_hz > 0.0 && duration_s > 0.0 && dt_s > 0.0 && duration_s >= dt_s)) {
        throw InvalidArgument("fading_timeseries: need doppler_hz, duration_s, dt_s > 0");
    }
    if (sinusoids_per_component < 1) {
        throw InvalidArgument("fading_timeseries: sinusoids_per_component must be >= 1");
    }
    const int m_int = static_cast<int>(mr);
    const int64_t n_steps = static_cast<int64_t>(std::llround(duration_s / dt_s)) + 1;

    constexpr int kBlockElems = 16;
    const int n_blocks = (illuminated_count + kBlockElems - 1) / kBlockElems;
    std::vector<std::vector<double>> partial(static_cast<size_t>(n_blocks));

    const bool par = (policy == ExecPolicy::Parallel);
#pragma omp parallel for schedule(dynamic, 1) if (par)
    for (int b = 0; b < n_blocks; ++b) {
        const int lo = b * kBlockElems;
        const int hi = std::min(lo + kBlockElems, illuminated_count);
        auto& acc = partial[static_cast<size_t>(b)];
        acc.assign(static_cast<size_t>(n_steps), 0.0);
        kernels::fading_block(lo, hi, m_int, nak.omega, doppler_hz, n_steps, dt_s,
                              sinusoids_per_component, seed ^ kTagFading, acc.data());
    }

    FadingTrace trace;
    trace.dt = dt_s;
    trace.doppler_hz = doppler_hz;
    trace.samples.assign(static_cast<size_t>(n_steps), 0.0);
    // Blocks merge in element order for thread-count independence.
    for (const auto& acc : partial) {
        for (int64_t t = 0; t < n_steps; ++t) trace.samples[static_cast<size_t>(t)] += acc[static_cast<size_t>(t)];
    }
    return trace;
}

CrossingStats empirical_lcr_aod(const FadingTrace& trace, double z) {
    if (trace.samples.size() < 2) {
        throw InvalidArgument("empirical_lcr_aod: trace must hold at least two samples");
    }
    if (!(z >= 0.0)) {
        throw InvalidArgument("empirical_lcr_aod: z must be >= 0");
    }
    int64_t crossings = 0;
    int64_t below = 0;
    const size_t n = trace.samples.size();
    for (size_t i = 0; i + 1 < n; ++i) {
        if (trace.samples[i] > z && trace.samples[i + 1] <= z) ++crossings;
    }
    for (size_t i = 0; i < n; ++i) {
        if (trace.samples[i] <= z) ++below;
    }
    if (crossings < 100) {
        throw InsufficientCrossings("empirical_lcr_aod: only " + std::to_string(crossings) +
                                    " downward crossings at z = " + std::to_string(z));
    }
    const double duration = static_cast<double>(n - 1) * trace.dt;
    CrossingStats out;
    out.crossings = crossings;
    out.crossings_per_second = static_cast<double>(crossings) / duration;
    out.fraction_below = static_cast<double>(below) / static_cast<double>(n);
    out.mean_sojourn_s = static_cast<double>(below) * trace.dt / static_cast<double>(crossings);
    return out;
}

}  // namespace rislink
