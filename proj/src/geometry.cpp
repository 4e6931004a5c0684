#include "rislink/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "rislink/errors.hpp"

namespace rislink {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;
// Absolute slack (metres) for deciding whether a crossing lies on a panel
// side segment.
constexpr double kSegmentTol = 1e-9;

double cot(double x) { return std::cos(x) / std::sin(x); }

}  // namespace

void SphericalPosition::validate() const {
    if (!(std::isfinite(r) && r > 0.0)) {
        throw InvalidArgument("SphericalPosition: r must be finite and > 0, got " +
                              std::to_string(r));
    }
    if (!(theta > 0.0 && theta < kPi)) {
        throw InvalidArgument("SphericalPosition: theta must lie in (0, pi), got " +
                              std::to_string(theta));
    }
    if (!(phi > 0.0 && phi < kPi)) {
        throw InvalidArgument("SphericalPosition: phi must lie in (0, pi), got " +
                              std::to_string(phi));
    }
}

void RisPanel::validate() const {
    if (!(std::isfinite(half_width) && half_width > 0.0)) {
        throw InvalidArgument("RisPanel: half_width must be finite and > 0, got " +
                              std::to_string(half_width));
    }
    if (!(std::isfinite(half_height) && half_height > 0.0)) {
        throw InvalidArgument("RisPanel: half_height must be finite and > 0, got " +
                              std::to_string(half_height));
    }
    if (num_elements < 1) {
        throw InvalidArgument("RisPanel: num_elements must be >= 1, got " +
                              std::to_string(num_elements));
    }
}

void ConeAntenna::validate() const {
    if (!(spreading_angle > 0.0 && spreading_angle < kHalfPi)) {
        throw InvalidArgument("ConeAntenna: spreading_angle must lie in (0, pi/2), got " +
                              std::to_string(spreading_angle));
    }
}

double FootprintEllipse::area() const { return kPi * semi_major * semi_minor; }

const char* to_string(CaseTag c) {
    switch (c) {
        case CaseTag::C1: return "C1";
        case CaseTag::C2: return "C2";
        case CaseTag::C3: return "C3";
        case CaseTag::C4: return "C4";
        case CaseTag::C5: return "C5";
    }
    return "?";
}

double solve_phi_prime(const SphericalPosition& pos, const ConeAntenna& cone) {
    pos.validate();
    cone.validate();
    const double phi = pos.phi;
    if (phi == kHalfPi) return kHalfPi;
    if (phi > kHalfPi) {
        SphericalPosition mirrored = pos;
        mirrored.phi = kPi - phi;
        return kPi - solve_phi_prime(mirrored, cone);
    }

    const double d = cone.spreading_angle / 2.0;
    const double h = pos.r * std::sin(phi) * std::sin(pos.theta);
    const auto g = [&](double x) {
        return std::abs(h * cot(phi) - h * cot(x + d)) - std::abs(h * cot(x - d) - h * cot(phi));
    };

    // The root sits strictly inside [phi, pi/2]; the nudge keeps the
    // endpoint evaluations away from the removable kinks at the ends.
    double lo = phi + 1e-9;
    double hi = kHalfPi - 1e-9;
    if (lo >= hi) return kHalfPi;
    double glo = g(lo);
    double ghi = g(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo < 0.0) == (ghi < 0.0)) {
        throw NoRootInBracket("solve_phi_prime: no sign change over [phi, pi/2] at phi = " +
                              std::to_string(phi));
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double gm = g(mid);
        if (gm == 0.0) return mid;
        if ((gm < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

FootprintEllipse compute_footprint(const SphericalPosition& pos, const ConeAntenna& cone) {
    const double pp = solve_phi_prime(pos, cone);
    const double d = cone.spreading_angle / 2.0;
    const double h = pos.r * std::sin(pos.phi) * std::sin(pos.theta);

    double alpha = std::abs(h * cot(pos.phi) - h * cot(pp + d));
    double beta = pos.r * std::tan(d);
    // The major axis points away from the transmitter's azimuth side, which
    // flips across phi = pi/2.
    const double sigma = (pos.phi <= kHalfPi) ? 1.0 : -1.0;
    double psi = std::atan2(std::cos(pos.theta), sigma * std::sin(pos.theta));
    if (alpha < beta) {
        std::swap(alpha, beta);
        psi += kHalfPi;
    }
    psi = std::fmod(psi, kPi);
    if (psi < 0.0) psi += kPi;
    if (psi >= kPi) psi = 0.0;

    if (!(std::isfinite(alpha) && std::isfinite(beta) && alpha > 0.0 && beta > 0.0)) {
        throw DegenerateFootprint("compute_footprint: non-finite or non-positive axes at r = " +
                                  std::to_string(pos.r));
    }
    return FootprintEllipse{alpha, beta, psi};
}

CartesianPoint aiming_point(const SphericalPosition& pos, const ConeAntenna& cone) {
    const double pp = solve_phi_prime(pos, cone);
    const double st = std::sin(pos.theta);
    const double rho = std::abs(pos.r * st * std::cos(pos.phi) -
                                pos.r * st * std::sin(pos.phi) * cot(pp));
    const double sigma = (pos.phi <= kHalfPi) ? 1.0 : -1.0;
    return CartesianPoint{rho * sigma * st, rho * std::cos(pos.theta)};
}

namespace {

// Coordinates of p in the ellipse-aligned frame (rotate by -rotation).
CartesianPoint derotate(const FootprintEllipse& fp, CartesianPoint p) {
    const double c = std::cos(fp.rotation);
    const double s = std::sin(fp.rotation);
    return CartesianPoint{p.x * c + p.z * s, -p.x * s + p.z * c};
}

// Quadratic form of the ellipse: < 1 inside, 1 on the boundary.
double ellipse_qval(const FootprintEllipse& fp, CartesianPoint p) {
    const CartesianPoint q = derotate(fp, p);
    const double u = q.x / fp.semi_major;
    const double v = q.z / fp.semi_minor;
    return u * u + v * v;
}

// Crossings of the ellipse with the line z = c (horizontal == true) or
// x = c (horizontal == false).  Tangency counts as no crossing.
SideCrossings line_crossings(const FootprintEllipse& fp, double c, bool horizontal) {
    const double cps = std::cos(fp.rotation);
    const double sps = std::sin(fp.rotation);
    const double ia2 = 1.0 / (fp.semi_major * fp.semi_major);
    const double ib2 = 1.0 / (fp.semi_minor * fp.semi_minor);
    double A, C;
    if (horizontal) {
        A = cps * cps * ia2 + sps * sps * ib2;
        C = c * c * (sps * sps * ia2 + cps * cps * ib2) - 1.0;
    } else {
        A = sps * sps * ia2 + cps * cps * ib2;
        C = c * c * (cps * cps * ia2 + sps * sps * ib2) - 1.0;
    }
    const double B = 2.0 * c * sps * cps * (ia2 - ib2);
    const double disc = B * B - 4.0 * A * C;
    SideCrossings out;
    if (disc <= 0.0) return out;
    const double sd = std::sqrt(disc);
    const double r1 = (-B - sd) / (2.0 * A);
    const double r2 = (-B + sd) / (2.0 * A);
    out.exists = true;
    out.lo = std::min(r1, r2);
    out.hi = std::max(r1, r2);
    return out;
}

struct Classified {
    CaseTag tag;
    double spill;
    SideCrossings top;
    SideCrossings right;
};

Classified classify(const FootprintEllipse& fp, const RisPanel& panel) {
    const double aw = panel.half_width;
    const double bh = panel.half_height;
    const double ef = fp.area();
    Classified out;
    out.top = line_crossings(fp, bh, true);
    out.right = line_crossings(fp, aw, false);

    const bool ne_in = ellipse_qval(fp, {aw, bh}) < 1.0;
    const bool nw_in = ellipse_qval(fp, {-aw, bh}) < 1.0;

    if (ne_in && nw_in) {
        // All four corners inside (central symmetry), so the panel is fully
        // covered and the spilt area is everything beyond the rectangle.
        out.tag = CaseTag::C5;
        out.spill = std::clamp(1.0 - 4.0 * aw * bh / ef, 0.0, 1.0);
        return out;
    }
    if (ne_in || nw_in) {
        out.tag = CaseTag::C4;
        if (!out.top.exists || !out.right.exists) {
            throw DegenerateFootprint(
                "spillover: corner inside the footprint but a side line shows no crossing");
        }
        CartesianPoint q, v, rcorner;
        if (ne_in) {
            q = {aw, out.right.lo};
            v = {out.top.lo, bh};
            rcorner = {aw, bh};
        } else {
            q = {out.top.hi, bh};
            v = {-aw, -out.right.hi};
            rcorner = {-aw, bh};
        }
        const double area = elliptic_sector_area(fp, q, v) - triangle_area(q, rcorner) -
                            triangle_area(rcorner, v);
        out.spill = std::clamp(2.0 * area / ef, 0.0, 1.0);
        return out;
    }

    const bool top_on = out.top.exists && std::abs(out.top.lo) <= aw + kSegmentTol &&
                        std::abs(out.top.hi) <= aw + kSegmentTol;
    const bool right_on = out.right.exists && std::abs(out.right.lo) <= bh + kSegmentTol &&
                          std::abs(out.right.hi) <= bh + kSegmentTol;
    double spill = 0.0;
    if (top_on) {
        const CartesianPoint q{out.top.hi, bh};
        const CartesianPoint v{out.top.lo, bh};
        spill += 2.0 * (elliptic_sector_area(fp, q, v) - triangle_area(q, v)) / ef;
    }
    if (right_on) {
        const CartesianPoint q{aw, out.right.lo};
        const CartesianPoint v{aw, out.right.hi};
        spill += 2.0 * (elliptic_sector_area(fp, q, v) - triangle_area(q, v)) / ef;
    }
    if (top_on && right_on) {
        out.tag = CaseTag::C3;
    } else if (top_on || right_on) {
        out.tag = CaseTag::C2;
    } else {
        out.tag = CaseTag::C1;
    }
    out.spill = std::clamp(spill, 0.0, 1.0);
    return out;
}

void validate_footprint_arg(const FootprintEllipse& fp) {
    if (!(std::isfinite(fp.semi_major) && std::isfinite(fp.semi_minor) && fp.semi_major > 0.0 &&
          fp.semi_minor > 0.0)) {
        throw DegenerateFootprint("footprint axes must be finite and > 0");
    }
}

}  // namespace

std::vector<CartesianPoint> EllipseRectIntersections::points(const RisPanel& panel) const {
    std::vector<CartesianPoint> out;
    if (top.exists) {
        out.push_back({top.lo, panel.half_height});
        out.push_back({top.hi, panel.half_height});
    }
    if (right.exists) {
        out.push_back({panel.half_width, right.lo});
        out.push_back({panel.half_width, right.hi});
    }
    return out;
}

EllipseRectIntersections ellipse_rect_intersections(const FootprintEllipse& fp,
                                                    const RisPanel& panel) {
    validate_footprint_arg(fp);
    panel.validate();
    const Classified c = classify(fp, panel);
    return EllipseRectIntersections{c.tag, c.top, c.right};
}

double elliptic_sector_area(const FootprintEllipse& fp, CartesianPoint q, CartesianPoint v) {
    validate_footprint_arg(fp);
    for (const CartesianPoint& p : {q, v}) {
        const double e = ellipse_qval(fp, p) - 1.0;
        const CartesianPoint d = derotate(fp, p);
        const double gx = 2.0 * d.x / (fp.semi_major * fp.semi_major);
        const double gz = 2.0 * d.z / (fp.semi_minor * fp.semi_minor);
        const double gnorm = std::hypot(gx, gz);
        // e / |grad| approximates the distance from the boundary.
        if (gnorm == 0.0 || std::abs(e) / gnorm > 1e-9) {
            throw PointNotOnEllipse("elliptic_sector_area: endpoint (" + std::to_string(p.x) +
                                    ", " + std::to_string(p.z) + ") is off the ellipse");
        }
    }
    const CartesianPoint dq = derotate(fp, q);
    const CartesianPoint dv = derotate(fp, v);
    const double tq = std::atan2(dq.z / fp.semi_minor, dq.x / fp.semi_major);
    const double tv = std::atan2(dv.z / fp.semi_minor, dv.x / fp.semi_major);
    double dt = tv - tq;
    if (dt <= 0.0) dt += 2.0 * kPi;
    return 0.5 * dt * fp.semi_major * fp.semi_minor;
}

double triangle_area(CartesianPoint q, CartesianPoint v) {
    return 0.5 * std::abs(q.x * v.z - v.x * q.z);
}

IlluminationResult spillover_fraction(const FootprintEllipse& fp, const RisPanel& panel) {
    validate_footprint_arg(fp);
    panel.validate();
    const Classified c = classify(fp, panel);
    const double ef = fp.area();
    int count;
    if (c.tag == CaseTag::C5) {
        // Full coverage: every element is hit, independent of rounding in
        // the spill ratio.
        count = panel.num_elements;
    } else {
        const double covered_ratio = ef * (1.0 - c.spill) / (4.0 * panel.half_width * panel.half_height);
        count = static_cast<int>(std::floor(covered_ratio * panel.num_elements));
        count = std::clamp(count, 0, panel.num_elements);
    }
    return IlluminationResult{c.tag, c.spill, ef, count};
}

IlluminationResult illuminated_elements(const FootprintEllipse& fp, const RisPanel& panel) {
    IlluminationResult res = spillover_fraction(fp, panel);
    if (res.illuminated_count == 0) {
        throw ZeroIlluminated("illuminated_elements: footprint covers no element (case " +
                              std::string(to_string(res.case_tag)) + ", spill " +
                              std::to_string(res.spillover_fraction) + ")");
    }
    return res;
}

}  // namespace rislink
