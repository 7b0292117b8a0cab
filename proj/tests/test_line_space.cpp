#include "visang/line_space.hpp"

#include "visang/errors.hpp"
#include "visang/presets.hpp"
#include "visang/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace visang;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("line membership in (p, phi) coordinates") {
    const SupportBody disk = make_disk(1.0);
    CHECK(line_hits(disk, {0.5, 1.0}));
    CHECK(line_hits(disk, {1.0, 2.2}));
    CHECK(!line_hits(disk, {1.5, 2.2}));
}

TEST_CASE("density catalogue: coefficients and classes") {
    const AngularDensity c = density_catalog("const");
    CHECK(c.coeff(0) == 1.0);
    CHECK(c.coeff(3) == 0.0);
    CHECK(c.periodicity == Periodicity::pi_periodic);

    const AngularDensity s4 = density_catalog("abs_sin_4");
    CHECK(s4.coeff(0) == doctest::Approx(8.0 / pi));
    CHECK(s4.coeff(2) == doctest::Approx(-16.0 / (3.0 * pi)));
    CHECK(s4.coeff(3) == 0.0);

    const AngularDensity ac = density_catalog("abs_cos");
    CHECK(ac.coeff(0) == doctest::Approx(2.0 / pi));
    CHECK(ac.coeff(2) == doctest::Approx(4.0 / (3.0 * pi)));

    const AngularDensity ps3 = density_catalog("power_sine", 3);
    CHECK(ps3.coeff(2) == doctest::Approx(4.5));
    CHECK(ps3.coeff(0) == doctest::Approx(1.5));
    CHECK(ps3.eval(0.0) == doctest::Approx(6.0)); // |sin|^0 == 1 at the kink
    CHECK(ps3.periodicity == Periodicity::pi_periodic);

    const AngularDensity h2 = density_catalog("hurwitz", 2);
    CHECK(h2.coeff(0) == 1.0);
    CHECK(h2.coeff(2) == 3.0);
    CHECK(h2.periodicity == Periodicity::pi_periodic);
    CHECK(density_catalog("hurwitz", 3).periodicity == Periodicity::general_2pi);

    CHECK(density_catalog("cos", 2).periodicity == Periodicity::pi_periodic);
    CHECK(density_catalog("cos", 3).periodicity == Periodicity::anti_pi_periodic);

    CHECK_THROWS_AS(density_catalog("nope"), UnknownDensityError);
    CHECK_THROWS_AS(density_catalog("power_sine", 2), BadParamError);
    CHECK_THROWS_AS(density_catalog("hurwitz", 1), BadParamError);
    CHECK_THROWS_AS(density_from_spec("power_sine:x"), BadParamError);
    CHECK(density_from_spec("cos:4").id == "cos:4");
}

TEST_CASE("catalogued coefficients match numeric fourier analysis") {
    for (const char* spec : {"const", "abs_sin_4", "abs_cos", "power_sine:3", "power_sine:4",
                             "hurwitz:2", "hurwitz:3", "cos:2", "cos:3"}) {
        CAPTURE(spec);
        const AngularDensity d = density_from_spec(spec);
        const bool kinked = d.family == "abs_sin_4" || d.family == "abs_cos" ||
                            (d.family == "power_sine" && d.param % 2 == 0);
        const std::size_t n = kinked ? (1u << 20) : (1u << 12);
        const FourierCoeffs fc = fourier_analyze(d.eval, n, 10);
        CHECK(std::fabs(fc.a0 - d.coeff(0)) < 1e-10);
        for (std::size_t k = 1; k <= 10; ++k) {
            CHECK(std::fabs(fc.a[k - 1] - d.coeff(k)) < 1e-10);
            CHECK(std::fabs(fc.b[k - 1]) < 1e-10); // all catalogued densities even
        }
        // periodicity classes against measured parity content
        if (d.periodicity == Periodicity::pi_periodic)
            for (std::size_t k = 1; k <= 10; k += 2)
                CHECK(std::fabs(fc.a[k - 1]) < 1e-10);
        if (d.periodicity == Periodicity::anti_pi_periodic) {
            CHECK(std::fabs(fc.a0) < 1e-10);
            for (std::size_t k = 2; k <= 10; k += 2)
                CHECK(std::fabs(fc.a[k - 1]) < 1e-10);
        }
    }
}

TEST_CASE("fourier pair measure closed forms") {
    const SupportBody disk = make_disk(1.0);
    CHECK(pair_measure_fourier(disk, density_catalog("const")) ==
          doctest::Approx(4.0 * pi * pi).epsilon(1e-14));

    const SupportBody gen = body_from_preset("generic").body;
    for (int k : {1, 2, 3, 4, 5}) {
        CHECK(pair_measure_fourier(gen, density_catalog("cos", k)) ==
              doctest::Approx(pi * pi * gen.spectrum().at(k)).epsilon(1e-13));
    }

    // odd-harmonic body against an even-harmonic density: only A_0 survives
    const SupportBody cw = make_const_width(1.0, {0.0, 0.0, 0.1}, {});
    CHECK(pair_measure_fourier(cw, density_catalog("abs_sin_4")) ==
          doctest::Approx(32.0 * pi).epsilon(1e-13));
}

TEST_CASE("direct pair measure agrees with the closed forms") {
    const SupportBody disk = make_disk(1.0);
    const QuadResult unit = pair_measure_direct(disk, density_catalog("const"), 1e-10);
    CHECK(unit.value == doctest::Approx(4.0 * pi * pi).epsilon(1e-13));

    const QuadResult m = pair_measure_direct(disk, density_catalog("abs_sin_4"), 3e-8);
    CHECK(m.value == doctest::Approx(32.0 * pi).epsilon(1e-8));

    const SupportBody ell = make_ellipse(2.0, 1.0);
    const QuadResult pc = pair_measure_direct(ell, density_catalog("cos", 2), 1e-9);
    CHECK(pc.value ==
          doctest::Approx(pair_measure_fourier(ell, density_catalog("cos", 2))).epsilon(1e-8));
}

TEST_CASE("pair measure correlation reduction equals the plain double sum") {
    const SupportBody gen = body_from_preset("generic").body;
    const AngularDensity d = density_catalog("abs_sin_4");
    const std::size_t n = 512;
    // huge tolerance -> both stop at the first compared level, n_max = 2 n0
    const QuadResult fast = pair_measure_direct(gen, d, 1e30, n, 2 * n);
    const QuadResult plain = periodic_quad_2d(
        [&gen, &d](double x, double y) {
            return gen.eval(x).p * gen.eval(y).p * d.eval(y - x);
        },
        1e30, n, 2 * n);
    CHECK(fast.n == plain.n);
    CHECK(fast.value == doctest::Approx(plain.value).epsilon(1e-12));
}

TEST_CASE("rigid motions act on the coefficients") {
    const SupportBody disk = make_disk(1.0);
    const SupportBody moved = rigid_motion(disk, 0.0, {0.3, 0.0});
    CHECK(moved.cos_coeff(1) == doctest::Approx(0.3));
    CHECK(moved.spectrum().at(1) == doctest::Approx(0.09));

    const SupportBody gen = body_from_preset("generic").body;
    const SupportBody full_turn = rigid_motion(gen, 2.0 * pi, {0.0, 0.0});
    for (std::size_t k = 1; k <= gen.degree(); ++k) {
        CHECK(full_turn.cos_coeff(k) == doctest::Approx(gen.cos_coeff(k)).epsilon(1e-13));
        CHECK(full_turn.sin_coeff(k) == doctest::Approx(gen.sin_coeff(k)).epsilon(1e-13));
    }

    const SupportBody ell = make_ellipse(2.0, 1.0);
    const SupportBody quarter = rigid_motion(ell, 0.5 * pi, {0.0, 0.0});
    CHECK(quarter.cos_coeff(2) == doctest::Approx(-ell.cos_coeff(2)).epsilon(1e-12));
    CHECK(quarter.spectrum().at(2) == doctest::Approx(ell.spectrum().at(2)).epsilon(1e-12));
    CHECK(perimeter(quarter) == doctest::Approx(perimeter(ell)).epsilon(1e-14));
    CHECK(area(quarter) == doctest::Approx(area(ell)).epsilon(1e-13));

    // translating the origin out of the body must fail validation
    CHECK_THROWS_AS(rigid_motion(disk, 0.0, {1.5, 0.0}), NotPositiveError);
}

TEST_CASE("spectrum invariance under random rigid motions") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> len(0.0, 0.15);
    for (const NamedBody& nb : standard_suite()) {
        CAPTURE(nb.desc);
        const HarmonicSpectrum base = nb.body.spectrum();
        for (int i = 0; i < 20; ++i) {
            const double theta = ang(rng);
            const double shift_ang = ang(rng);
            const double shift_len = len(rng);
            const SupportBody moved = rigid_motion(
                nb.body, theta,
                {shift_len * std::cos(shift_ang), shift_len * std::sin(shift_ang)});
            const HarmonicSpectrum sp = moved.spectrum();
            for (std::size_t k = 2; k <= base.c_sq.size(); ++k) {
                const double ref = std::max(base.at(k), 1e-30);
                CHECK(std::fabs(sp.at(k) - base.at(k)) / ref < 1e-10);
            }
        }
    }
}

TEST_CASE("invariance of the pair measure and its counterexample") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> len(0.0, 0.15);
    std::vector<RigidMotion> motions;
    for (int i = 0; i < 20; ++i) {
        const double a = ang(rng), sa = ang(rng), sl = len(rng);
        motions.push_back({a, {sl * std::cos(sa), sl * std::sin(sa)}});
    }

    const SupportBody disk = make_disk(1.0);
    CHECK(invariance_check(disk, density_catalog("abs_sin_4"), motions).max_rel_deviation <
          1e-10);
    const SupportBody ell = make_ellipse(2.0, 1.0);
    CHECK(invariance_check(ell, density_catalog("const"), motions).max_rel_deviation < 1e-10);

    // A_1 != 0 breaks translation invariance: a shifted disk picks up
    // pi^2 |v|^2 relative to the centred value 0
    const AngularDensity c1 = density_catalog("cos", 1);
    CHECK(pair_measure_fourier(disk, c1) == doctest::Approx(0.0));
    const SupportBody shifted = rigid_motion(disk, 0.0, {0.3, 0.0});
    CHECK(pair_measure_fourier(shifted, c1) == doctest::Approx(pi * pi * 0.09).epsilon(1e-13));
}
