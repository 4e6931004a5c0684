// Timing harness for the sampling kernels: serial reference vs the OpenMP
// path, with a bit-identity check on every pair.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rislink/geometry.hpp"
#include "rislink/mc_oracle.hpp"
#include "rislink/stats.hpp"

using namespace rislink;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial_s, double parallel_s, bool identical) {
    std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name,
                serial_s, parallel_s, serial_s / parallel_s,
                identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run the serial path\n");
#endif

    const NakagamiParams nak{3.0, 1.0};
    const uint64_t seed = 42;

    {
        const uint64_t trials = 2'000'000;
        auto t0 = std::chrono::steady_clock::now();
        const MomentEstimate a = empirical_aggregate(800, nak, trials, seed, ExecPolicy::Serial);
        const double ts = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        const MomentEstimate b = empirical_aggregate(800, nak, trials, seed, ExecPolicy::Parallel);
        const double tp = seconds_since(t0);
        report("aggregate moments M=800", ts, tp,
               std::memcmp(&a.mean, &b.mean, sizeof a.mean) == 0 &&
                   std::memcmp(&a.variance, &b.variance, sizeof a.variance) == 0);
    }

    {
        const FootprintEllipse fp{1.4, 0.7, 0.5};
        const RisPanel panel{1.0, 0.5, 800};
        const uint64_t samples = 50'000'000;
        auto t0 = std::chrono::steady_clock::now();
        const EstimateCI a = mc_area_overlap(fp, panel, samples, seed, ExecPolicy::Serial);
        const double ts = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        const EstimateCI b = mc_area_overlap(fp, panel, samples, seed, ExecPolicy::Parallel);
        const double tp = seconds_since(t0);
        report("spillover area 5e7 samples", ts, tp,
               std::memcmp(&a.value, &b.value, sizeof a.value) == 0);
    }

    {
        auto t0 = std::chrono::steady_clock::now();
        const FadingTrace a =
            fading_timeseries(200, nak, 5.0, 30.0, 1e-3, seed, 64, ExecPolicy::Serial);
        const double ts = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        const FadingTrace b =
            fading_timeseries(200, nak, 5.0, 30.0, 1e-3, seed, 64, ExecPolicy::Parallel);
        const double tp = seconds_since(t0);
        report("fading trace M=200 30 s", ts, tp,
               a.samples.size() == b.samples.size() &&
                   std::memcmp(a.samples.data(), b.samples.data(),
                               a.samples.size() * sizeof(double)) == 0);
    }

    return 0;
}
