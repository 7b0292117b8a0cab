#include "visang/visual_angle.hpp"

#include "visang/errors.hpp"
#include "visang/line_space.hpp"
#include "visang/presets.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace visang;

namespace {
constexpr double pi = std::numbers::pi;

PlanarPoint rotate(PlanarPoint p, double theta) {
    return {p.x * std::cos(theta) - p.y * std::sin(theta),
            p.x * std::sin(theta) + p.y * std::cos(theta)};
}
} // namespace

TEST_CASE("exterior test with margin") {
    const SupportBody disk = make_disk(1.0);
    const ExteriorCheck out = is_exterior(disk, {2.0, 0.0});
    CHECK(out.exterior);
    CHECK(out.margin == doctest::Approx(1.0).epsilon(1e-12));

    const ExteriorCheck in = is_exterior(disk, {0.5, 0.0});
    CHECK(!in.exterior);
    CHECK(in.margin == doctest::Approx(-0.5).epsilon(1e-12));

    const SupportBody ell = make_ellipse(2.0, 1.0);
    const ExteriorCheck e = is_exterior(ell, {0.0, 1.5});
    CHECK(e.exterior);
    CHECK(e.margin == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("tangent normals of a disk") {
    const SupportBody disk = make_disk(1.0);
    for (double d : {1.5, 2.0, 5.0}) {
        const auto [a, b] = tangent_normals(disk, {d, 0.0});
        const double expect = std::acos(1.0 / d);
        CHECK(std::fabs(a - expect) < 1e-12);
        CHECK(std::fabs(b - (2.0 * pi - expect)) < 1e-12);
    }
    const auto [a, b] = tangent_normals(disk, {0.0, 2.0});
    CHECK(std::fabs(a - (0.5 * pi - std::acos(0.5))) < 1e-12);
    CHECK(std::fabs(b - (0.5 * pi + std::acos(0.5))) < 1e-12);

    CHECK_THROWS_AS(tangent_normals(disk, {0.5, 0.0}), PointNotExteriorError);
    CHECK_THROWS_AS(tangent_normals(disk, {1.0 + 1e-12, 0.0}), PointNotExteriorError);
}

TEST_CASE("translation equivariance of tangent normals") {
    const SupportBody disk = make_disk(1.0);
    const SupportBody shifted = make_body(1.0, {0.3}, {0.0});
    const auto [a0, b0] = tangent_normals(disk, {2.0, 0.0});
    const auto [a1, b1] = tangent_normals(shifted, {2.3, 0.0});
    CHECK(std::fabs(a0 - a1) < 1e-11);
    CHECK(std::fabs(b0 - b1) < 1e-11);
}

TEST_CASE("disk visual angle oracle") {
    const SupportBody disk = make_disk(1.0);
    CHECK(visual_angle(disk, {2.0, 0.0}) == doctest::Approx(pi / 3.0).epsilon(1e-12));
    CHECK(visual_angle(disk, {100.0, 0.0}) ==
          doctest::Approx(2.0 * std::asin(0.01)).epsilon(1e-10));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> rad(1.001, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const double theta = ang(rng);
        const double d = rad(rng);
        const PlanarPoint p{d * std::cos(theta), d * std::sin(theta)};
        const double expect = 2.0 * std::asin(1.0 / d);
        CHECK(std::fabs(visual_angle(disk, p) - expect) < 1e-10);
    }
}

TEST_CASE("omega grows monotonically to pi at the boundary") {
    const SupportBody disk = make_disk(1.0);
    double prev = 0.0;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
        const double w = visual_angle(disk, {1.0 + eps, 0.0});
        CHECK(w > prev);
        prev = w;
    }
    CHECK(prev > pi - 5e-3);
}

TEST_CASE("direction angles of disk support lines") {
    const SupportBody disk = make_disk(1.0);
    const auto [na, nb] = tangent_normals(disk, {2.0, 0.0});
    double d1 = direction_angle({2.0, 0.0}, na);
    double d2 = direction_angle({2.0, 0.0}, nb);
    if (d1 > d2)
        std::swap(d1, d2);
    CHECK(d1 == doctest::Approx(pi / 3.0).epsilon(1e-12));
    CHECK(d2 == doctest::Approx(2.0 * pi / 3.0).epsilon(1e-12));

    // rotational equivariance: same angles seen from (0, 2)
    const auto [ma, mb] = tangent_normals(disk, {0.0, 2.0});
    double e1 = direction_angle({0.0, 2.0}, ma);
    double e2 = direction_angle({0.0, 2.0}, mb);
    if (e1 > e2)
        std::swap(e1, e2);
    CHECK(e1 == doctest::Approx(pi / 3.0).epsilon(1e-12));
    CHECK(e2 == doctest::Approx(2.0 * pi / 3.0).epsilon(1e-12));

    // a line directed along OP has direction pi/2 by construction
    CHECK(direction_angle({2.0, 0.0}, 0.5 * pi) == doctest::Approx(0.5 * pi).epsilon(1e-14));
    CHECK_THROWS_AS(direction_angle({0.0, 0.0}, 1.0), DegenerateDirectionError);
}

TEST_CASE("omega split: symmetric for the centred disk, consistent elsewhere") {
    const SupportBody disk = make_disk(1.0);
    for (double d : {1.2, 2.0, 7.0}) {
        const auto [w1, w2] = omega_split(disk, {d * 0.6, -d * 0.8});
        CHECK(w1 == doctest::Approx(w2).epsilon(1e-11));
        CHECK(w1 + w2 == doctest::Approx(2.0 * std::asin(1.0 / d)).epsilon(1e-10));
    }

    const SupportBody shifted = make_body(1.0, {0.5}, {0.0});
    const VisualAngleData d = analyze_point(shifted, {0.0, 2.0});
    CHECK(std::fabs(d.omega1 - d.omega2) > 1e-3);
    CHECK(d.omega1 + d.omega2 == doctest::Approx(d.omega).epsilon(1e-9));

    const SupportBody ell = make_ellipse(2.0, 1.0);
    const VisualAngleData e = analyze_point(ell, {3.0, 3.0});
    CHECK(std::fabs(e.omega1 + e.omega2 - e.omega) < 1e-9);
}

TEST_CASE("omega split handles points inside the critical support-line shell") {
    // for p = 1 + 0.3 cos(phi), points straight up with 0.954 < y < 1 are
    // exterior but lie inside the support line with normal pi/2; the
    // unwrapped bracket must still reproduce omega
    const SupportBody shifted = make_body(1.0, {0.3}, {0.0});
    for (double y : {0.96, 0.98, 0.995}) {
        const PlanarPoint p{0.0, y};
        const double center_dist = std::hypot(p.x - 0.3, p.y);
        REQUIRE(center_dist > 1.0); // exterior to the unit circle at (0.3, 0)
        REQUIRE(y < 1.0);           // but inside the support line with normal pi/2
        const VisualAngleData d = analyze_point(shifted, p);
        CHECK(d.omega == doctest::Approx(2.0 * std::asin(1.0 / center_dist)).epsilon(1e-10));
        CHECK(d.omega1 + d.omega2 == doctest::Approx(d.omega).epsilon(1e-9));
        CHECK(d.omega1 > 0.0);
        CHECK(d.omega2 > 0.0);
        CHECK(d.omega1 < pi);
        CHECK(d.omega2 < pi);
        CHECK(d.beta - d.alpha == doctest::Approx(d.omega).epsilon(1e-9));
    }
}

TEST_CASE("visual angle against the polyline oracle on the ellipse") {
    const SupportBody ell = make_ellipse(2.0, 1.0);
    for (const PlanarPoint p : {PlanarPoint{4.0, 0.0}, PlanarPoint{0.0, 3.0},
                                PlanarPoint{2.5, 1.7}, PlanarPoint{-3.0, -0.4}}) {
        const double expect = oracles::polyline_visual_angle(ell, p);
        CHECK(visual_angle(ell, p) == doctest::Approx(expect).epsilon(1e-6));
    }
}

TEST_CASE("rotation equivariance of omega and its split") {
    const SupportBody gen = body_from_preset("generic").body;
    const PlanarPoint p{1.7, 0.9};
    const VisualAngleData base = analyze_point(gen, p);
    for (double theta : {0.3, 1.1, 2.9, 4.5}) {
        const SupportBody rot = rigid_motion(gen, theta, {0.0, 0.0});
        const VisualAngleData d = analyze_point(rot, rotate(p, theta));
        CHECK(std::fabs(d.omega - base.omega) < 1e-10);
        CHECK(std::fabs(d.omega1 - base.omega1) < 1e-10);
        CHECK(std::fabs(d.omega2 - base.omega2) < 1e-10);
    }
}

TEST_CASE("random exterior points: ranges and split identity on the suite") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> fac(1.02, 8.0);
    for (const NamedBody& nb : standard_suite()) {
        CAPTURE(nb.desc);
        for (int i = 0; i < 200; ++i) {
            const double theta = ang(rng);
            const double grow = fac(rng);
            // scale out from a safely exterior anchor in direction theta
            const double r = grow * nb.body.support_upper_bound();
            const VisualAngleData d =
                analyze_point(nb.body, {r * std::cos(theta), r * std::sin(theta)});
            CHECK(d.omega > 0.0);
            CHECK(d.omega < pi);
            CHECK(d.omega1 > 0.0);
            CHECK(d.omega1 < pi);
            CHECK(d.omega2 > 0.0);
            CHECK(d.omega2 < pi);
            CHECK(std::fabs(d.omega1 + d.omega2 - d.omega) < 1e-9);
        }
    }
}
