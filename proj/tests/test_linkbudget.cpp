#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rislink/errors.hpp"
#include "rislink/linkbudget.hpp"
#include "rislink/rng.hpp"
#include "rislink/units.hpp"

using namespace rislink;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

const ConeAntenna kCone{deg_to_rad(15.0)};
const RisPanel kPanel{1.0, 0.5, 800};
const PathLossParams kGroundHop{1e-3, 1.0, 50.0, 2.2};  // c0 = -30 dB
const RadioConfig kRadio{1e5, 100.0, 29000.0 / 225.0, 1.0};
const BenchmarkGeometry kBench{0.1, deg_to_rad(45.0), 50.0};

}  // namespace

TEST_CASE("directional gain from the apex angle") {
    CHECK(tx_gain_directional(15.0) == Approx(29000.0 / 225.0).epsilon(1e-15));
    CHECK_THROWS_AS(tx_gain_directional(0.0), InvalidArgument);
    CHECK_THROWS_AS(tx_gain_directional(90.0), InvalidArgument);
}

TEST_CASE("cartesian positions") {
    const Vec3 u = uav_cartesian({10.0, kHalfPi, kPi / 3.0});
    CHECK(u.x == Approx(5.0).epsilon(1e-12));
    CHECK(u.y == Approx(10.0 * std::sin(kPi / 3.0)).epsilon(1e-12));
    CHECK(std::abs(u.z) <= 1e-14);

    const Vec3 g = gn_position(kBench);
    CHECK(g.x == 0.0);
    CHECK(g.y == Approx(50.0 * std::cos(kPi / 4.0)).epsilon(1e-12));
    CHECK(g.z == Approx(-50.0 * std::sin(kPi / 4.0)).epsilon(1e-12));
}

TEST_CASE("panel-to-ground hop loss matches the reference") {
    CHECK(path_loss_ris_gn(kGroundHop) / 1.82922020770931e-7 == Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(path_loss_ris_gn(PathLossParams{0.0, 1.0, 50.0, 2.2}), InvalidArgument);
    CHECK_THROWS_AS(path_loss_ris_gn(PathLossParams{1e-3, 1.0, 0.0, 2.2}), InvalidArgument);
}

TEST_CASE("transmitter-to-panel hop loss matches the reference") {
    const SphericalPosition pos{10.0, kHalfPi, kHalfPi};
    CHECK(path_loss_uav_ris(pos, kCone, kPanel) ==
          Approx(4.591260461079697e-4).epsilon(1e-12));
}

TEST_CASE("the two hop-loss groupings agree") {
    Xoshiro256pp rng(11);
    for (int i = 0; i < 200; ++i) {
        const SphericalPosition pos{1.0 + 99.0 * rng.uniform01(),
                                    0.2 + (kPi - 0.4) * rng.uniform01(),
                                    0.05 + (kPi - 0.1) * rng.uniform01()};
        const double direct = path_loss_uav_ris(pos, kCone, kPanel);
        const double expanded = path_loss_uav_ris_expanded(pos, kCone, kPanel);
        CAPTURE(pos.r);
        CAPTURE(pos.theta);
        CAPTURE(pos.phi);
        CHECK(expanded == Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("hop loss falls exactly fourfold when the distance doubles") {
    // The footprint axes both scale linearly with r, and doubling is exact
    // in floating point, so the ratio is exact too.
    for (double r : {2.5, 7.0, 31.0}) {
        const SphericalPosition near{r, 1.1, 0.8};
        const SphericalPosition far{2.0 * r, 1.1, 0.8};
        CHECK(path_loss_uav_ris(near, kCone, kPanel) ==
              4.0 * path_loss_uav_ris(far, kCone, kPanel));
    }
}

TEST_CASE("amplitude threshold matches the reference") {
    const SphericalPosition pos{15.0, kHalfPi, kHalfPi};
    const double l0 = path_loss_uav_ris(pos, kCone, kPanel) * path_loss_ris_gn(kGroundHop);
    CHECK(snr_threshold_z(kRadio, l0) == Approx(455.91571110910368).epsilon(1e-12));
}

TEST_CASE("mean SNR of the panel link matches the reference") {
    const SphericalPosition pos{20.0, kHalfPi, kHalfPi};
    const double l0 = path_loss_uav_ris(pos, kCone, kPanel) * path_loss_ris_gn(kGroundHop);
    const AggregateChannel m3 = aggregate_moments(800, {3.0, 1.0}, 5.0);
    CHECK(average_snr(l0, kRadio, m3) == Approx(159.42319511550313).epsilon(1e-12));
    const AggregateChannel m1 = aggregate_moments(800, {1.0, 1.0}, 5.0);
    CHECK(average_snr(l0, kRadio, m1) == Approx(136.07287877146519).epsilon(1e-12));
}

TEST_CASE("omnidirectional benchmark matches the reference") {
    const SphericalPosition pos{20.0, kHalfPi, kHalfPi};
    const Vec3 u = uav_cartesian(pos);
    const Vec3 g = gn_position(kBench);
    const double dg = std::sqrt((u.x - g.x) * (u.x - g.x) + (u.y - g.y) * (u.y - g.y) +
                                (u.z - g.z) * (u.z - g.z));
    CHECK(dg == Approx(38.54590039974296).epsilon(1e-12));

    CHECK(benchmark1_snr(pos, kPanel, kRadio, kBench, kGroundHop, {3.0, 1.0},
                         Bench1Combining::Coherent) ==
          Approx(0.019180133798793782).epsilon(1e-12));
    CHECK(benchmark1_snr(pos, kPanel, kRadio, kBench, kGroundHop, {1.0, 1.0},
                         Bench1Combining::Coherent) ==
          Approx(0.017666394295143144).epsilon(1e-12));
    CHECK(benchmark1_snr(pos, kPanel, kRadio, kBench, kGroundHop, {3.0, 1.0},
                         Bench1Combining::PowerSum) ==
          Approx(0.0096217254329485651).epsilon(1e-12));
}

TEST_CASE("omnidirectional benchmark reduces to the direct path without a panel") {
    const SphericalPosition pos{20.0, kHalfPi, kHalfPi};
    const RisPanel no_panel{1.0, 0.5, 0};
    const double got = benchmark1_snr(pos, no_panel, kRadio, kBench, kGroundHop, {3.0, 1.0},
                                      Bench1Combining::Coherent);
    const Vec3 u = uav_cartesian(pos);
    const Vec3 g = gn_position(kBench);
    const double dg = std::hypot(std::hypot(u.x - g.x, u.y - g.y), u.z - g.z);
    const double l_dir = kBench.wavelength * kBench.wavelength / (16.0 * kPi * kPi) /
                         (dg * dg);
    CHECK(got == Approx(kRadio.transmit_snr * l_dir * kRadio.rx_gain).epsilon(1e-12));
    const double with_panel = benchmark1_snr(pos, kPanel, kRadio, kBench, kGroundHop,
                                             {3.0, 1.0}, Bench1Combining::Coherent);
    CHECK(got < with_panel);
}

TEST_CASE("direct-cone benchmark matches the reference") {
    const SphericalPosition pos{20.0, kHalfPi, kHalfPi};
    CHECK(benchmark2_ground_footprint_area(pos, kCone, kBench) ==
          Approx(87.922205293131793).epsilon(1e-12));
    CHECK(benchmark2_snr(pos, kCone, kRadio, kBench) ==
          Approx(116.6559898486257).epsilon(1e-12));
}

TEST_CASE("direct-cone benchmark needs the transmitter above the ground node") {
    // theta close to pi puts the UAV below the ground node's altitude.
    const SphericalPosition low{60.0, 2.8, kHalfPi};
    CHECK_THROWS_AS(benchmark2_snr(low, kCone, kRadio, kBench), InvalidArgument);
}

TEST_CASE("radio and benchmark inputs are validated") {
    CHECK_THROWS_AS((RadioConfig{0.0, 100.0, 1.0, 1.0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((RadioConfig{1e5, 0.0, 1.0, 1.0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((RadioConfig{1e5, 100.0, -1.0, 1.0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((BenchmarkGeometry{0.0, 0.7, 50.0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((BenchmarkGeometry{0.1, 0.7, 0.0}.validate()), InvalidArgument);
}
