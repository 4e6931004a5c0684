// Sampling kernels.  This translation unit is compiled with relaxed FP flags
// for vectorisation; nothing here feeds back into the analytic code paths.
#include "mc_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "rislink/rng.hpp"

namespace rislink::kernels {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Marsaglia-Tsang Gamma(shape, 1) sampler for shape >= 1; the caller handles
// shape < 1 by boosting.
double gamma_mt(Xoshiro256pp& rng, double shape) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
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
        double v = 1.0 + c * n1;
        if (v <= 0.0) continue;
        v = v * v * v;
        const double u = rng.uniform01();
        const double x2 = n1 * n1;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double gamma_sample(Xoshiro256pp& rng, double shape) {
    if (shape >= 1.0) return gamma_mt(rng, shape);
    const double g = gamma_mt(rng, shape + 1.0);
    double u = rng.uniform01();
    if (u == 0.0) u = 0x1.0p-53;
    return g * std::pow(u, 1.0 / shape);
}

// Runs n_trials aggregate draws, invoking consume(sum) for each.  The
// integer-m path writes per-element uniform products into a buffer first so
// the log/sqrt pass runs over independent slots and vectorises.
template <class F>
void run_aggregate_trials(int M, double m, double omega, int64_t n_trials, uint64_t chunk_seed,
                          F&& consume) {
    Xoshiro256pp rng(chunk_seed);
    const double scale = omega / m;
    const bool integer_m = (m == std::floor(m)) && m >= 1.0 && m <= 64.0;
    if (integer_m) {
        const int mi = static_cast<int>(m);
        std::vector<double> prod(static_cast<size_t>(M));
        for (int64_t t = 0; t < n_trials; ++t) {
            for (int i = 0; i < M; ++i) {
                double u = rng.uniform01();
                for (int j = 1; j < mi; ++j) u *= rng.uniform01();
                if (u == 0.0) u = 0x1.0p-53;
                prod[static_cast<size_t>(i)] = u;
            }
            double s = 0.0;
            for (int i = 0; i < M; ++i) {
                s += std::sqrt(-scale * std::log(prod[static_cast<size_t>(i)]));
            }
            consume(s);
        }
    } else {
        for (int64_t t = 0; t < n_trials; ++t) {
            double s = 0.0;
            for (int i = 0; i < M; ++i) s += std::sqrt(scale * gamma_sample(rng, m));
            consume(s);
        }
    }
}

}  // namespace

MomentPartial aggregate_chunk(int illuminated_count, double m, double omega, int64_t n_trials,
                              uint64_t chunk_seed, double* samples_out) {
    MomentPartial p;
    run_aggregate_trials(illuminated_count, m, omega, n_trials, chunk_seed, [&](double s) {
        if (samples_out) samples_out[p.n] = s;
        const double s2 = s * s;
        p.s1 += s;
        p.s2 += s2;
        p.s3 += s2 * s;
        p.s4 += s2 * s2;
        ++p.n;
    });
    return p;
}

void outage_chunk(int illuminated_count, double m, double omega, int64_t n_trials,
                  uint64_t chunk_seed, const double* zs, int nz, int64_t* counts) {
    run_aggregate_trials(illuminated_count, m, omega, n_trials, chunk_seed, [&](double s) {
        for (int i = 0; i < nz; ++i) {
            if (s <= zs[i]) ++counts[i];
        }
    });
}

int64_t area_outside_chunk(double semi_major, double semi_minor, double rotation, double half_w,
                           double half_h, int64_t n_samples, uint64_t chunk_seed) {
    Xoshiro256pp rng(chunk_seed);
    const double c = std::cos(rotation);
    const double s = std::sin(rotation);
    constexpr int64_t kBatch = 4096;
    std::vector<double> u1(kBatch), u2(kBatch);
    int64_t outside = 0;
    int64_t done = 0;
    while (done < n_samples) {
        const int64_t nb = std::min(kBatch, n_samples - done);
        for (int64_t i = 0; i < nb; ++i) u1[static_cast<size_t>(i)] = rng.uniform01();
        for (int64_t i = 0; i < nb; ++i) u2[static_cast<size_t>(i)] = rng.uniform01();
        for (int64_t i = 0; i < nb; ++i) {
            const double rad = std::sqrt(u1[static_cast<size_t>(i)]);
            const double ang = kTwoPi * u2[static_cast<size_t>(i)];
            const double ex = semi_major * rad * std::cos(ang);
            const double ez = semi_minor * rad * std::sin(ang);
            const double x = ex * c - ez * s;
            const double z = ex * s + ez * c;
            outside += (std::abs(x) > half_w) | (std::abs(z) > half_h);
        }
        done += nb;
    }
    return outside;
}

void gaussian_component_accum(double doppler_hz, double variance, int64_t n_steps, double dt,
                              int sinusoids, uint64_t stream_seed, double* out) {
    Xoshiro256pp rng(stream_seed);
    const size_t K = static_cast<size_t>(sinusoids);
    std::vector<double> re(K), im(K), cr(K), ci(K);
    // Stratified arrival angles keep the synthesised autocorrelation close
    // to the target with modest K.
    for (size_t k = 0; k < K; ++k) {
        const double zeta = kTwoPi * (static_cast<double>(k) + rng.uniform01()) / static_cast<double>(K);
        const double fk = doppler_hz * std::cos(zeta);
        const double theta = kTwoPi * rng.uniform01();
        re[k] = std::cos(theta);
        im[k] = std::sin(theta);
        cr[k] = std::cos(kTwoPi * fk * dt);
        ci[k] = std::sin(kTwoPi * fk * dt);
    }
    const double amp = std::sqrt(2.0 * variance / static_cast<double>(K));
    for (int64_t t = 0; t < n_steps; ++t) {
        double acc = 0.0;
        for (size_t k = 0; k < K; ++k) acc += re[k];
        out[t] += amp * acc;
        // One complex rotation per sinusoid per step instead of a trig call.
        for (size_t k = 0; k < K; ++k) {
            const double nr = re[k] * cr[k] - im[k] * ci[k];
            im[k] = re[k] * ci[k] + im[k] * cr[k];
            re[k] = nr;
        }
    }
}

void fading_block(int elem_begin, int elem_end, int m_int, double omega, double doppler_hz,
                  int64_t n_steps, double dt, int sinusoids, uint64_t seed, double* acc) {
    const double comp_var = omega / (2.0 * m_int);
    std::vector<double> sq(static_cast<size_t>(n_steps));
    std::vector<double> comp(static_cast<size_t>(n_steps));
    const int comps_per_elem = 2 * m_int;
    for (int e = elem_begin; e < elem_end; ++e) {
        std::fill(sq.begin(), sq.end(), 0.0);
        for (int cidx = 0; cidx < comps_per_elem; ++cidx) {
            std::fill(comp.begin(), comp.end(), 0.0);
            const uint64_t stream =
                derive_stream_seed(seed, static_cast<uint64_t>(e) * comps_per_elem + cidx);
            gaussian_component_accum(doppler_hz, comp_var, n_steps, dt, sinusoids, stream,
                                     comp.data());
            for (int64_t t = 0; t < n_steps; ++t) comp[static_cast<size_t>(t)] *= comp[static_cast<size_t>(t)];
            for (int64_t t = 0; t < n_steps; ++t) sq[static_cast<size_t>(t)] += comp[static_cast<size_t>(t)];
        }
        for (int64_t t = 0; t < n_steps; ++t) acc[t] += std::sqrt(sq[static_cast<size_t>(t)]);
    }
}

}  // namespace rislink::kernels
