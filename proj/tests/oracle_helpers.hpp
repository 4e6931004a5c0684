// Independent re-derivations used to cross-check the geometry code.  These
// deliberately avoid the library's own internals: rotation, point counting
// and polygon areas are rebuilt from scratch here.
#pragma once

#include <cmath>
#include <numbers>

#include "rislink/geometry.hpp"

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

struct Rotated {
    double x;
    double z;
};

inline Rotated rotate_into_ellipse_frame(const rislink::FootprintEllipse& fp, double x,
                                         double z) {
    const double c = std::cos(fp.rotation);
    const double s = std::sin(fp.rotation);
    return Rotated{x * c + z * s, -x * s + z * c};
}

inline bool point_inside_ellipse(const rislink::FootprintEllipse& fp, double x, double z) {
    const Rotated p = rotate_into_ellipse_frame(fp, x, z);
    const double u = p.x / fp.semi_major;
    const double v = p.z / fp.semi_minor;
    return u * u + v * v < 1.0;
}

// Counts element centres of a uniform nx-by-nz tiling that fall inside the
// footprint.  Approximates the analytic element count to within a boundary
// band of roughly one element row.
inline int count_element_centres(const rislink::FootprintEllipse& fp,
                                 const rislink::RisPanel& panel, int nx, int nz) {
    const double dx = 2.0 * panel.half_width / nx;
    const double dz = 2.0 * panel.half_height / nz;
    int count = 0;
    for (int i = 0; i < nx; ++i) {
        const double x = -panel.half_width + (i + 0.5) * dx;
        for (int j = 0; j < nz; ++j) {
            const double z = -panel.half_height + (j + 0.5) * dz;
            if (point_inside_ellipse(fp, x, z)) ++count;
        }
    }
    return count;
}

// Elliptic sector area by the shoelace formula over a dense polygon
// (centre, arc from q to v counter-clockwise).  Independent of the
// closed-form sector expression.
inline double sector_area_polygon(const rislink::FootprintEllipse& fp, rislink::CartesianPoint q,
                                  rislink::CartesianPoint v, int steps = 1000000) {
    const Rotated rq = rotate_into_ellipse_frame(fp, q.x, q.z);
    const Rotated rv = rotate_into_ellipse_frame(fp, v.x, v.z);
    const double tq = std::atan2(rq.z / fp.semi_minor, rq.x / fp.semi_major);
    double tv = std::atan2(rv.z / fp.semi_minor, rv.x / fp.semi_major);
    if (tv <= tq) tv += 2.0 * kPi;
    double area2 = 0.0;  // twice the signed area
    double px = fp.semi_major * std::cos(tq);
    double pz = fp.semi_minor * std::sin(tq);
    for (int i = 1; i <= steps; ++i) {
        const double t = tq + (tv - tq) * i / steps;
        const double cx = fp.semi_major * std::cos(t);
        const double cz = fp.semi_minor * std::sin(t);
        area2 += px * cz - cx * pz;
        px = cx;
        pz = cz;
    }
    return 0.5 * std::abs(area2);
}

// In-plane ray construction of the footprint extent along x, valid only for
// theta = pi/2 where the model is exact.  Rays leave the transmitter at
// (r cos phi, r sin phi) with elevation angles phi_prime -+ half the
// spreading angle and land where they meet the panel line.
struct RayEndpoints {
    double lo;
    double hi;
    double axis;  // landing point of the boresight ray

    double centre() const { return 0.5 * (lo + hi); }
    double half_width() const { return 0.5 * (hi - lo); }
};

inline RayEndpoints ray_footprint_extent(double r, double phi, double phi_prime, double delta) {
    const double xu = r * std::cos(phi);
    const double h = r * std::sin(phi);
    const auto landing = [&](double angle) { return xu - h * std::cos(angle) / std::sin(angle); };
    const double a = landing(phi_prime - delta);
    const double b = landing(phi_prime + delta);
    return RayEndpoints{std::min(a, b), std::max(a, b), landing(phi_prime)};
}

}  // namespace oracle
