#include "rislink/linkbudget.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rislink/errors.hpp"
#include "rislink/units.hpp"

namespace rislink {

namespace {

constexpr double kPi = std::numbers::pi;

double norm3(const Vec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

}  // namespace

void PathLossParams::validate() const {
    if (!(std::isfinite(c0) && c0 > 0.0)) {
        throw InvalidArgument("PathLossParams: c0 must be > 0, got " + std::to_string(c0));
    }
    if (!(std::isfinite(d0) && d0 > 0.0)) {
        throw InvalidArgument("PathLossParams: d0 must be > 0, got " + std::to_string(d0));
    }
    if (!(std::isfinite(ground_dist) && ground_dist > 0.0)) {
        throw InvalidArgument("PathLossParams: ground_dist must be > 0, got " +
                              std::to_string(ground_dist));
    }
    if (!(std::isfinite(exponent) && exponent >= 0.0)) {
        throw InvalidArgument("PathLossParams: exponent must be >= 0, got " +
                              std::to_string(exponent));
    }
}

void RadioConfig::validate() const {
    if (!(std::isfinite(transmit_snr) && transmit_snr > 0.0)) {
        throw InvalidArgument("RadioConfig: transmit_snr must be > 0");
    }
    if (!(std::isfinite(outage_threshold) && outage_threshold > 0.0)) {
        throw InvalidArgument("RadioConfig: outage_threshold must be > 0");
    }
    if (!(std::isfinite(tx_gain) && tx_gain > 0.0)) {
        throw InvalidArgument("RadioConfig: tx_gain must be > 0");
    }
    if (!(std::isfinite(rx_gain) && rx_gain > 0.0)) {
        throw InvalidArgument("RadioConfig: rx_gain must be > 0");
    }
}

void BenchmarkGeometry::validate() const {
    if (!(std::isfinite(wavelength) && wavelength > 0.0)) {
        throw InvalidArgument("BenchmarkGeometry: wavelength must be > 0");
    }
    if (!(gn_elevation > 0.0 && gn_elevation < kPi / 2.0)) {
        throw InvalidArgument("BenchmarkGeometry: gn_elevation must lie in (0, pi/2)");
    }
    if (!(std::isfinite(gn_distance) && gn_distance > 0.0)) {
        throw InvalidArgument("BenchmarkGeometry: gn_distance must be > 0");
    }
}

Vec3 uav_cartesian(const SphericalPosition& pos) {
    const double st = std::sin(pos.theta);
    return Vec3{pos.r * st * std::cos(pos.phi), pos.r * st * std::sin(pos.phi),
                pos.r * std::cos(pos.theta)};
}

Vec3 gn_position(const BenchmarkGeometry& bench) {
    return Vec3{0.0, bench.gn_distance * std::cos(bench.gn_elevation),
                -bench.gn_distance * std::sin(bench.gn_elevation)};
}

double tx_gain_directional(double spreading_angle_deg) {
    if (!(spreading_angle_deg > 0.0 && spreading_angle_deg < 90.0)) {
        throw InvalidArgument("tx_gain_directional: angle must lie in (0, 90) degrees, got " +
                              std::to_string(spreading_angle_deg));
    }
    return 29000.0 / (spreading_angle_deg * spreading_angle_deg);
}

double path_loss_uav_ris(const SphericalPosition& pos, const ConeAntenna& cone,
                         const RisPanel& panel) {
    const FootprintEllipse fp = compute_footprint(pos, cone);
    return panel.element_area() / fp.area();
}

double path_loss_uav_ris_expanded(const SphericalPosition& pos, const ConeAntenna& cone,
                                  const RisPanel& panel) {
    const double pp = solve_phi_prime(pos, cone);
    const double d = cone.spreading_angle / 2.0;
    const double sp = std::sin(pos.phi) * std::sin(pos.theta);
    const double term = std::abs(sp / std::tan(pos.phi) - sp / std::tan(pp + d)) * std::tan(d);
    return panel.element_area() / (kPi * pos.r * pos.r) / term;
}

double path_loss_ris_gn(const PathLossParams& pl) {
    pl.validate();
    return pl.c0 * std::pow(pl.ground_dist / pl.d0, -pl.exponent);
}

double snr_threshold_z(const RadioConfig& radio, double l0) {
    radio.validate();
    if (!(std::isfinite(l0) && l0 > 0.0)) {
        throw InvalidArgument("snr_threshold_z: l0 must be > 0, got " + std::to_string(l0));
    }
    return std::sqrt(radio.outage_threshold /
                     (l0 * radio.tx_gain * radio.rx_gain * radio.transmit_snr));
}

double average_snr(double l0, const RadioConfig& radio, const AggregateChannel& agg) {
    radio.validate();
    if (!(std::isfinite(l0) && l0 > 0.0)) {
        throw InvalidArgument("average_snr: l0 must be > 0, got " + std::to_string(l0));
    }
    return l0 * radio.tx_gain * radio.rx_gain * radio.transmit_snr *
           (agg.mean * agg.mean + agg.variance);
}

double benchmark1_snr(const SphericalPosition& pos, const RisPanel& panel,
                      const RadioConfig& radio, const BenchmarkGeometry& bench,
                      const PathLossParams& pl, const NakagamiParams& nak,
                      Bench1Combining combining) {
    pos.validate();
    radio.validate();
    bench.validate();
    pl.validate();
    // num_elements == 0 is allowed here and means the panel contributes
    // nothing; the full panel validation would reject it.
    if (!(panel.half_width > 0.0 && panel.half_height > 0.0 && panel.num_elements >= 0)) {
        throw InvalidArgument("benchmark1_snr: malformed panel");
    }

    const Vec3 u = uav_cartesian(pos);
    const Vec3 g = gn_position(bench);
    const double d_g = norm3(Vec3{u.x - g.x, u.y - g.y, u.z - g.z});
    // Direct UAV-to-ground path, isotropic transmit side.
    const double l_dir = bench.wavelength * bench.wavelength / (16.0 * kPi * kPi) *
                         std::pow(d_g / pl.d0, -2.0);

    if (panel.num_elements == 0) {
        return radio.transmit_snr * l_dir * radio.rx_gain;
    }

    // Panel hop: per-element spherical spreading to the panel, then the
    // ground segment.
    const double l_ris_per_el = panel.element_area() / (4.0 * kPi) *
                                std::pow(pos.r / pl.d0, -2.0);
    const double l_ris = l_ris_per_el * path_loss_ris_gn(pl) * radio.rx_gain;
    const AggregateChannel agg = aggregate_moments(panel.num_elements, nak, 1.0);

    if (combining == Bench1Combining::Coherent) {
        const double amp = std::sqrt(l_dir * radio.rx_gain) + std::sqrt(l_ris) * agg.mean;
        return radio.transmit_snr * amp * amp + radio.transmit_snr * l_ris * agg.variance;
    }
    return radio.transmit_snr * l_dir * radio.rx_gain +
           radio.transmit_snr * l_ris * (agg.mean * agg.mean + agg.variance);
}

double benchmark2_ground_footprint_area(const SphericalPosition& pos, const ConeAntenna& cone,
                                        const BenchmarkGeometry& bench) {
    pos.validate();
    cone.validate();
    bench.validate();
    const Vec3 u = uav_cartesian(pos);
    const Vec3 g = gn_position(bench);
    const double height = u.z - g.z;
    if (!(height > 0.0)) {
        throw InvalidArgument(
            "benchmark2: UAV must sit above the ground plane through the ground node");
    }
    const double rp = norm3(Vec3{u.x - g.x, u.y - g.y, u.z - g.z});
    // The cone aims at the ground node, so the footprint geometry is that of
    // a transmitter at slant range rp and elevation asin(height / rp) over a
    // horizontal plane.
    const double ratio = std::min(height / rp, 1.0);
    const SphericalPosition equiv{rp, kPi / 2.0, std::asin(ratio)};
    const FootprintEllipse fp = compute_footprint(equiv, cone);
    return fp.area();
}

double benchmark2_snr(const SphericalPosition& pos, const ConeAntenna& cone,
                      const RadioConfig& radio, const BenchmarkGeometry& bench) {
    radio.validate();
    const double ef = benchmark2_ground_footprint_area(pos, cone, bench);
    return radio.transmit_snr * radio.tx_gain * radio.rx_gain * bench.wavelength *
           bench.wavelength / (4.0 * kPi * ef);
}

}  // namespace rislink
