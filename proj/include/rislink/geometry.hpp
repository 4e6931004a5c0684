#pragma once

#include <vector>

namespace rislink {

// Position of the UAV in spherical coordinates anchored at the panel centre.
// The panel lies in the y = 0 plane, x horizontal, z vertical; theta is the
// polar angle from the vertical z axis, phi the azimuth from the x axis.
struct SphericalPosition {
    double r;      // metres, > 0
    double theta;  // radians, (0, pi)
    double phi;    // radians, (0, pi): the UAV stays on the illuminated side

    void validate() const;
};

struct CartesianPoint {
    double x;
    double z;
};

// Rectangular panel centred at the origin of the y = 0 plane.
struct RisPanel {
    double half_width;   // metres, along x
    double half_height;  // metres, along z
    int num_elements;    // uniform square tiling, >= 1

    double element_area() const { return 4.0 * half_width * half_height / num_elements; }
    void validate() const;
};

// Conical beam; the full apex angle is spreading_angle.
struct ConeAntenna {
    double spreading_angle;  // radians, (0, pi/2)

    void validate() const;
};

// Beam footprint on the panel plane.  rotation is the angle of the semi_major
// axis measured from the x axis, normalised to [0, pi).
struct FootprintEllipse {
    double semi_major;
    double semi_minor;
    double rotation;

    double area() const;
};

enum class CaseTag { C1, C2, C3, C4, C5 };

const char* to_string(CaseTag c);

// Crossings of the footprint ellipse with the line carrying one panel side.
// lo <= hi are the free coordinates of the two crossing points on the full
// line (not clipped to the side segment); exists is false when the line
// misses or only touches the ellipse.
struct SideCrossings {
    bool exists = false;
    double lo = 0.0;
    double hi = 0.0;
};

struct EllipseRectIntersections {
    CaseTag case_tag;
    SideCrossings top;    // line z = +half_height; lo/hi are x coordinates
    SideCrossings right;  // line x = +half_width;  lo/hi are z coordinates

    // Crossing points in the order top-lo, top-hi, right-lo, right-hi,
    // skipping sides without crossings.
    std::vector<CartesianPoint> points(const RisPanel& panel) const;
};

struct IlluminationResult {
    CaseTag case_tag;
    double spillover_fraction;  // in [0, 1]
    double footprint_area;
    int illuminated_count;
};

// Root of the aiming-angle equation: the boresight elevation that balances
// the footprint around the aiming point.  Lies in [phi, pi/2] for
// phi <= pi/2 and in [pi/2, phi] otherwise; equals pi/2 exactly when
// phi == pi/2.
double solve_phi_prime(const SphericalPosition& pos, const ConeAntenna& cone);

// Elliptical footprint of the cone on the panel plane.
FootprintEllipse compute_footprint(const SphericalPosition& pos, const ConeAntenna& cone);

// Centre of the footprint in the panel plane.
CartesianPoint aiming_point(const SphericalPosition& pos, const ConeAntenna& cone);

// Classifies how the footprint overlaps the panel and reports the ellipse
// crossings with the top and right side lines.
EllipseRectIntersections ellipse_rect_intersections(const FootprintEllipse& fp,
                                                    const RisPanel& panel);

// Area of the elliptic sector swept counter-clockwise from q to v, both of
// which must lie on the ellipse (centre at the origin).
double elliptic_sector_area(const FootprintEllipse& fp, CartesianPoint q, CartesianPoint v);

// Unsigned area of the triangle with vertices at the origin, q, v.
double triangle_area(CartesianPoint q, CartesianPoint v);

// Fraction of footprint area falling outside the panel, with the case tag,
// footprint area and resulting element count.  Never throws on a zero count;
// use illuminated_elements when a positive count is required.
IlluminationResult spillover_fraction(const FootprintEllipse& fp, const RisPanel& panel);

// Same as spillover_fraction but throws ZeroIlluminated when no element is
// hit.
IlluminationResult illuminated_elements(const FootprintEllipse& fp, const RisPanel& panel);

}  // namespace rislink
