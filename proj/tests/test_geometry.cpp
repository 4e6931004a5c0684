#include <cmath>
#include <numbers>
#include <string>

#include "doctest.h"
#include "oracle_helpers.hpp"
#include "rislink/errors.hpp"
#include "rislink/geometry.hpp"
#include "rislink/units.hpp"

using namespace rislink;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

const ConeAntenna kCone{deg_to_rad(15.0)};
const RisPanel kPanel{1.0, 0.5, 800};

// The aiming-angle equation, written out again so the root can be checked
// without trusting the solver's own residual.
double aiming_residual(const SphericalPosition& pos, const ConeAntenna& cone, double x) {
    const double d = cone.spreading_angle / 2.0;
    const double h = pos.r * std::sin(pos.phi) * std::sin(pos.theta);
    const auto cot = [](double a) { return std::cos(a) / std::sin(a); };
    return std::abs(h * cot(pos.phi) - h * cot(x + d)) -
           std::abs(h * cot(x - d) - h * cot(pos.phi));
}

}  // namespace

TEST_CASE("input validation rejects out-of-domain values") {
    CHECK_THROWS_AS((SphericalPosition{0.0, kHalfPi, kHalfPi}.validate()), InvalidArgument);
    CHECK_THROWS_AS((SphericalPosition{-1.0, kHalfPi, kHalfPi}.validate()), InvalidArgument);
    CHECK_THROWS_AS((SphericalPosition{1.0, 0.0, kHalfPi}.validate()), InvalidArgument);
    CHECK_THROWS_AS((SphericalPosition{1.0, kPi, kHalfPi}.validate()), InvalidArgument);
    CHECK_THROWS_AS((SphericalPosition{1.0, kHalfPi, 0.0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((SphericalPosition{1.0, kHalfPi, kPi}.validate()), InvalidArgument);
    CHECK_THROWS_AS((RisPanel{0.0, 0.5, 800}.validate()), InvalidArgument);
    CHECK_THROWS_AS((RisPanel{1.0, 0.5, 0}.validate()), InvalidArgument);
    CHECK_THROWS_AS(ConeAntenna{0.0}.validate(), InvalidArgument);
    CHECK_THROWS_AS(ConeAntenna{kHalfPi}.validate(), InvalidArgument);
}

TEST_CASE("solve_phi_prime reproduces the reference root") {
    const SphericalPosition pos{10.0, kHalfPi, kPi / 3.0};
    CHECK(solve_phi_prime(pos, kCone) == Approx(1.0569793011971930117).epsilon(1e-12));
}

TEST_CASE("solve_phi_prime is exact at broadside") {
    const SphericalPosition pos{7.0, 1.1, kHalfPi};
    CHECK(solve_phi_prime(pos, kCone) == kHalfPi);
}

TEST_CASE("solve_phi_prime root properties over a parameter grid") {
    for (double r : {1.0, 5.0, 20.0, 100.0}) {
        for (double phi : {0.1, 0.7, 1.2, 1.5}) {
            for (double theta : {0.3, kHalfPi, 2.5}) {
                const SphericalPosition pos{r, theta, phi};
                const double pp = solve_phi_prime(pos, kCone);
                CAPTURE(r);
                CAPTURE(phi);
                CAPTURE(theta);
                CHECK(pp >= phi);
                CHECK(pp <= kHalfPi);
                // Residual scale: the equation is a difference of lengths of
                // order h / tan(phi).
                const double scale = r * std::sin(phi) * std::sin(theta) / std::tan(phi);
                CHECK(std::abs(aiming_residual(pos, kCone, pp)) <= 1e-9 * scale);
            }
        }
    }
}

TEST_CASE("solve_phi_prime mirrors across broadside") {
    for (double phi : {0.4, 0.9, 1.3}) {
        const SphericalPosition pos{12.0, 1.0, phi};
        const SphericalPosition mirrored{12.0, 1.0, kPi - phi};
        CHECK(solve_phi_prime(mirrored, kCone) ==
              Approx(kPi - solve_phi_prime(pos, kCone)).epsilon(1e-12));
    }
}

TEST_CASE("compute_footprint reproduces the reference ellipse") {
    const SphericalPosition pos{10.0, kHalfPi, kPi / 3.0};
    const FootprintEllipse fp = compute_footprint(pos, kCone);
    CHECK(fp.semi_major == Approx(1.5116547619227649627).epsilon(1e-12));
    CHECK(fp.semi_minor == Approx(1.3165249758739585347).epsilon(1e-12));
    CHECK(fp.rotation == Approx(0.0).epsilon(1e-12));
    CHECK(fp.area() == Approx(6.252181711444017167).epsilon(1e-12));
}

TEST_CASE("normal incidence gives a circular footprint") {
    for (double r : {1.0, 8.0, 15.0, 60.0}) {
        const SphericalPosition pos{r, kHalfPi, kHalfPi};
        const FootprintEllipse fp = compute_footprint(pos, kCone);
        CAPTURE(r);
        CHECK(std::abs(fp.semi_major - fp.semi_minor) <= 1e-12 * fp.semi_minor);
    }
    const FootprintEllipse fp15 = compute_footprint({15.0, kHalfPi, kHalfPi}, kCone);
    CHECK(fp15.area() == Approx(12.251537562905341).epsilon(1e-12));
    const FootprintEllipse fp10 = compute_footprint({10.0, kHalfPi, kHalfPi}, kCone);
    CHECK(fp10.area() == Approx(5.4451278057357069).epsilon(1e-12));
}

TEST_CASE("aiming_point reproduces the reference offset") {
    const SphericalPosition pos{10.0, kHalfPi, kPi / 3.0};
    const CartesianPoint k = aiming_point(pos, kCone);
    CHECK(k.x == Approx(0.11231918015407830631).epsilon(1e-12));
    CHECK(std::abs(k.z) <= 1e-15);
}

TEST_CASE("in-plane ray construction confirms extent, centring and axis hit") {
    // The closed-form footprint is exact for theta = pi/2; the edge and
    // boresight rays must land symmetrically around the panel centre.
    for (double r : {5.0, 10.0, 40.0}) {
        for (double phi : {0.4, kPi / 3.0, 1.0, 1.3}) {
            const SphericalPosition pos{r, kHalfPi, phi};
            const double pp = solve_phi_prime(pos, kCone);
            const auto rays =
                oracle::ray_footprint_extent(r, phi, pp, kCone.spreading_angle / 2.0);
            const FootprintEllipse fp = compute_footprint(pos, kCone);
            const CartesianPoint k = aiming_point(pos, kCone);
            CAPTURE(r);
            CAPTURE(phi);
            CHECK(std::abs(rays.centre()) <= 1e-9 * r);
            CHECK(rays.half_width() == Approx(fp.semi_major).epsilon(1e-9));
            CHECK(rays.axis == Approx(k.x).epsilon(1e-9));
        }
    }
}

TEST_CASE("axis swap keeps semi_major >= semi_minor") {
    // At theta = pi/3, phi = 2pi/3 the cross-plane radius exceeds the
    // in-plane one, so the axes and the rotation flip.
    const SphericalPosition pos{10.0, kPi / 3.0, 2.0 * kPi / 3.0};
    const FootprintEllipse fp = compute_footprint(pos, kCone);
    CHECK(fp.semi_major == Approx(10.0 * std::tan(kCone.spreading_angle / 2.0)).epsilon(1e-12));
    CHECK(fp.semi_minor < fp.semi_major);
    CHECK(fp.rotation == Approx(kPi / 3.0).epsilon(1e-12));
}

TEST_CASE("footprint rotation mirrors across broadside") {
    const SphericalPosition pos{10.0, kPi / 3.0, kPi / 3.0};
    const SphericalPosition mirrored{10.0, kPi / 3.0, 2.0 * kPi / 3.0};
    const FootprintEllipse a = compute_footprint(pos, kCone);
    const FootprintEllipse b = compute_footprint(mirrored, kCone);
    CHECK(a.semi_major == Approx(b.semi_major).epsilon(1e-12));
    CHECK(a.semi_minor == Approx(b.semi_minor).epsilon(1e-12));
    CHECK(b.rotation == Approx(kPi - a.rotation).epsilon(1e-12));
}

TEST_CASE("spillover and element count are mirror symmetric in phi") {
    for (double phi : {0.7, 1.0, 1.1}) {
        for (double theta : {0.9, kHalfPi}) {
            const FootprintEllipse a = compute_footprint({9.0, theta, phi}, kCone);
            const FootprintEllipse b = compute_footprint({9.0, theta, kPi - phi}, kCone);
            const IlluminationResult ia = spillover_fraction(a, kPanel);
            const IlluminationResult ib = spillover_fraction(b, kPanel);
            CAPTURE(phi);
            CAPTURE(theta);
            CHECK(ia.case_tag == ib.case_tag);
            CHECK(ia.spillover_fraction == Approx(ib.spillover_fraction).epsilon(1e-12));
            CHECK(ia.illuminated_count == ib.illuminated_count);
        }
    }
}

TEST_CASE("corner-overlap geometry matches the reference") {
    const FootprintEllipse fp{1.4, 0.7, deg_to_rad(30.0)};
    const EllipseRectIntersections xs = ellipse_rect_intersections(fp, kPanel);
    CHECK(xs.case_tag == CaseTag::C4);
    CHECK(xs.top.exists);
    CHECK(xs.right.exists);
    CHECK(xs.top.lo == Approx(-0.51961524227066319).epsilon(1e-12));
    CHECK(xs.top.hi == Approx(1.2619227312287535).epsilon(1e-12));
    CHECK(xs.right.lo == Approx(-0.073982254202279161).epsilon(1e-12));
    CHECK(xs.right.hi == Approx(0.87339031923406868).epsilon(1e-12));

    const IlluminationResult il = spillover_fraction(fp, kPanel);
    CHECK(il.case_tag == CaseTag::C4);
    CHECK(il.spillover_fraction == Approx(0.41067842694543664).epsilon(1e-12));
    CHECK(il.footprint_area == Approx(3.0787608005179974).epsilon(1e-12));
    const int expected =
        static_cast<int>(std::floor(il.footprint_area * (1.0 - il.spillover_fraction) / 2.0 * 800));
    CHECK(il.illuminated_count == expected);

    // Counting element centres is a boundary-band approximation of the
    // area-ratio count.
    const int counted = oracle::count_element_centres(fp, kPanel, 40, 20);
    CHECK(std::abs(counted - il.illuminated_count) <= 8);
}

TEST_CASE("single-side cap matches the reference circle") {
    const FootprintEllipse fp{0.6, 0.6, 0.3};
    const EllipseRectIntersections xs = ellipse_rect_intersections(fp, kPanel);
    CHECK(xs.case_tag == CaseTag::C2);
    CHECK(xs.top.exists);
    CHECK_FALSE(xs.right.exists);
    CHECK(xs.top.lo == Approx(-0.33166247903553998).epsilon(1e-12));
    CHECK(xs.top.hi == Approx(0.33166247903553998).epsilon(1e-12));
    const IlluminationResult il = spillover_fraction(fp, kPanel);
    CHECK(il.spillover_fraction == Approx(0.079604980817906302).epsilon(1e-12));
}

TEST_CASE("two-side caps match the circular-segment formula") {
    const double radius = 1.04;
    const FootprintEllipse fp{radius, radius, 0.0};
    const IlluminationResult il = spillover_fraction(fp, kPanel);
    CHECK(il.case_tag == CaseTag::C3);
    const auto cap = [&](double d) {
        return radius * radius * std::acos(d / radius) - d * std::sqrt(radius * radius - d * d);
    };
    const double expected = 2.0 * (cap(kPanel.half_height) + cap(kPanel.half_width)) / fp.area();
    CHECK(il.spillover_fraction == Approx(expected).epsilon(1e-12));
}

TEST_CASE("interior footprint spills nothing") {
    const FootprintEllipse fp{0.4, 0.3, 1.0};
    const IlluminationResult il = spillover_fraction(fp, kPanel);
    CHECK(il.case_tag == CaseTag::C1);
    CHECK(il.spillover_fraction == 0.0);
    CHECK(il.illuminated_count == static_cast<int>(std::floor(fp.area() / 2.0 * 800)));
}

TEST_CASE("full coverage illuminates every element") {
    const FootprintEllipse fp{3.0, 2.0, 0.25};
    const IlluminationResult il = spillover_fraction(fp, kPanel);
    CHECK(il.case_tag == CaseTag::C5);
    CHECK(il.spillover_fraction == Approx(1.0 - 2.0 / fp.area()).epsilon(1e-12));
    CHECK(il.illuminated_count == kPanel.num_elements);
}

TEST_CASE("spillover is continuous across the side-tangency transition") {
    const double eps = 1e-7;
    const FootprintEllipse inside{0.5 * (1.0 - eps), 0.5 * (1.0 - eps), 0.0};
    const FootprintEllipse outside{0.5 * (1.0 + eps), 0.5 * (1.0 + eps), 0.0};
    const IlluminationResult a = spillover_fraction(inside, kPanel);
    const IlluminationResult b = spillover_fraction(outside, kPanel);
    CHECK(a.case_tag == CaseTag::C1);
    CHECK(b.case_tag == CaseTag::C2);
    CHECK(std::abs(b.spillover_fraction - a.spillover_fraction) <= 1e-6);
}

TEST_CASE("spillover is continuous across the corner transition") {
    const double rc = std::sqrt(1.25);  // circle through the panel corners
    const double eps = 1e-7;
    const IlluminationResult a =
        spillover_fraction(FootprintEllipse{rc * (1.0 - eps), rc * (1.0 - eps), 0.0}, kPanel);
    const IlluminationResult b =
        spillover_fraction(FootprintEllipse{rc * (1.0 + eps), rc * (1.0 + eps), 0.0}, kPanel);
    CHECK(a.case_tag == CaseTag::C3);
    CHECK(b.case_tag == CaseTag::C5);
    CHECK(std::abs(b.spillover_fraction - a.spillover_fraction) <= 1e-6);
}

TEST_CASE("elliptic sector area matches the closed form and the polygon oracle") {
    const FootprintEllipse fp{2.0, 1.0, 0.0};
    const CartesianPoint q{2.0 * std::cos(0.3), std::sin(0.3)};
    const CartesianPoint v{2.0 * std::cos(1.1), std::sin(1.1)};
    CHECK(elliptic_sector_area(fp, q, v) == Approx(0.8).epsilon(1e-12));
    CHECK(oracle::sector_area_polygon(fp, q, v) == Approx(0.8).epsilon(1e-9));

    // Rotated ellipse with a wrap-around sweep.
    const FootprintEllipse rfp{1.7, 0.6, 0.9};
    const double t0 = 5.5;
    const double t1 = 1.2;
    const auto on_ellipse = [&](double t) {
        const double ex = rfp.semi_major * std::cos(t);
        const double ez = rfp.semi_minor * std::sin(t);
        const double c = std::cos(rfp.rotation);
        const double s = std::sin(rfp.rotation);
        return CartesianPoint{ex * c - ez * s, ex * s + ez * c};
    };
    const double expected = 0.5 * (t1 + 2.0 * oracle::kPi - t0) * rfp.semi_major * rfp.semi_minor;
    const double got = elliptic_sector_area(rfp, on_ellipse(t0), on_ellipse(t1));
    CHECK(got == Approx(expected).epsilon(1e-12));
    CHECK(oracle::sector_area_polygon(rfp, on_ellipse(t0), on_ellipse(t1)) ==
          Approx(expected).epsilon(1e-9));
}

TEST_CASE("elliptic sector rejects points off the boundary") {
    const FootprintEllipse fp{2.0, 1.0, 0.0};
    const CartesianPoint q{2.0 * std::cos(0.3), std::sin(0.3)};
    const CartesianPoint off{2.002 * std::cos(1.1), 1.001 * std::sin(1.1)};
    CHECK_THROWS_AS(elliptic_sector_area(fp, q, off), PointNotOnEllipse);
}

TEST_CASE("triangle area") {
    CHECK(triangle_area({1.0, 0.0}, {0.0, 1.0}) == Approx(0.5).epsilon(1e-15));
    CHECK(triangle_area({2.0, 1.0}, {4.0, 2.0}) == Approx(0.0).epsilon(1e-15));
}

TEST_CASE("footprints that cover no element are reported") {
    const FootprintEllipse fp{1e-4, 1e-4, 0.0};
    CHECK(spillover_fraction(fp, kPanel).illuminated_count == 0);
    CHECK_THROWS_AS(illuminated_elements(fp, kPanel), ZeroIlluminated);
}

TEST_CASE("tangent side lines count as no crossing") {
    const FootprintEllipse fp{0.5, 0.5, 0.0};  // touches z = +-0.5 exactly
    const EllipseRectIntersections xs = ellipse_rect_intersections(fp, kPanel);
    CHECK_FALSE(xs.top.exists);
    CHECK(xs.case_tag == CaseTag::C1);
    CHECK(xs.points(kPanel).empty());
}
