#pragma once

#include "rislink/geometry.hpp"
#include "rislink/stats.hpp"

namespace rislink {

struct Vec3 {
    double x;
    double y;
    double z;
};

// Distance-power-law segment between the panel and the ground node.
struct PathLossParams {
    double c0;           // reference gain at d0, linear
    double d0;           // reference distance, metres
    double ground_dist;  // panel-to-ground-node distance, metres
    double exponent;     // path loss exponent

    void validate() const;
};

struct RadioConfig {
    double transmit_snr;      // linear
    double outage_threshold;  // linear
    double tx_gain;           // linear
    double rx_gain;           // linear

    void validate() const;
};

// Shared inputs of both reference schemes.  The ground node sits in the
// x = 0 plane at gn_distance from the panel centre, depressed gn_elevation
// below the horizontal y axis.
struct BenchmarkGeometry {
    double wavelength;    // metres
    double gn_elevation;  // radians
    double gn_distance;   // metres

    void validate() const;
};

enum class Bench1Combining { Coherent, PowerSum };

// UAV position in panel-plane cartesian coordinates.
Vec3 uav_cartesian(const SphericalPosition& pos);

// Ground node position in the same frame.
Vec3 gn_position(const BenchmarkGeometry& bench);

// Transmit gain of the conical antenna from its full apex angle in degrees.
double tx_gain_directional(double spreading_angle_deg);

// UAV-to-panel segment loss: element area over footprint area.
double path_loss_uav_ris(const SphericalPosition& pos, const ConeAntenna& cone,
                         const RisPanel& panel);

// Same quantity through the expanded trigonometric grouping; kept as an
// independent route for consistency checks.
double path_loss_uav_ris_expanded(const SphericalPosition& pos, const ConeAntenna& cone,
                                  const RisPanel& panel);

// Panel-to-ground segment loss.
double path_loss_ris_gn(const PathLossParams& pl);

// Amplitude threshold equivalent to the outage SNR threshold, given the
// two-segment loss product l0.
double snr_threshold_z(const RadioConfig& radio, double l0);

// Mean received SNR of the panel-relayed link.
double average_snr(double l0, const RadioConfig& radio, const AggregateChannel& agg);

// Reference scheme 1: omnidirectional UAV transmission, panel plus direct
// path.  The panel hop reuses the per-element fading model; combining picks
// how the two paths add.
double benchmark1_snr(const SphericalPosition& pos, const RisPanel& panel,
                      const RadioConfig& radio, const BenchmarkGeometry& bench,
                      const PathLossParams& pl, const NakagamiParams& nak,
                      Bench1Combining combining);

// Reference scheme 2: the cone aims straight at the ground node; no panel.
double benchmark2_snr(const SphericalPosition& pos, const ConeAntenna& cone,
                      const RadioConfig& radio, const BenchmarkGeometry& bench);

// Footprint area of the direct cone on the ground plane through the ground
// node, exposed separately so its geometry can be tested on its own.
double benchmark2_ground_footprint_area(const SphericalPosition& pos, const ConeAntenna& cone,
                                        const BenchmarkGeometry& bench);

}  // namespace rislink
