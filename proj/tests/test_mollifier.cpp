#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eqd/mollifier.hpp"

using eqd::SpherePoint;

TEST_CASE("rho piecewise values") {
    CHECK(eqd::mollifier_rho(0.5, 0.1) == 0.0);
    CHECK(eqd::mollifier_rho(0.5, 0.25) == 0.0);  // knot delta/2
    CHECK(eqd::mollifier_rho(0.5, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eqd::mollifier_rho(0.5, 1.0) == 1.0);
    CHECK(eqd::mollifier_rho(0.5, 3.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(eqd::mollifier_rho(0.5, 4.0) == doctest::Approx(0.0));
    CHECK(eqd::mollifier_rho(0.5, 5.0) == 0.0);
    CHECK_THROWS(eqd::mollifier_rho(1.5, 1.0));
}

TEST_CASE("knot continuity of rho and rho_prime") {
    const double eps = 1e-9;
    for (double delta : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        for (double knot : {delta / 2.0, delta, 1.0 / delta, 2.0 / delta}) {
            CHECK(std::fabs(eqd::mollifier_rho(delta, knot - eps) -
                            eqd::mollifier_rho(delta, knot + eps)) < 1e-7);
            // one-sided limits of the closed forms agree to machine precision
            CHECK(std::fabs(eqd::mollifier_rho_prime(delta, knot) -
                            eqd::mollifier_rho_prime(delta, std::nextafter(knot, 0.0))) < 1e-12);
        }
        CHECK(eqd::mollifier_rho(delta, delta) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(eqd::mollifier_rho(delta, delta / 2.0) == doctest::Approx(0.0));
        CHECK(eqd::mollifier_rho_prime(delta, delta) == doctest::Approx(0.0));
        CHECK(eqd::mollifier_rho_prime(delta, 1.0 / delta) == doctest::Approx(0.0));
    }
}

TEST_CASE("rho_prime matches a central difference of rho") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (double delta : {0.3, 0.5, 0.9}) {
        for (int i = 0; i < 2000; ++i) {
            const double r = unit(rng) * (2.5 / delta);
            const double h = 1e-6;
            const double fd =
                (eqd::mollifier_rho(delta, r + h) - eqd::mollifier_rho(delta, r - h)) / (2.0 * h);
            // away from the knots the closed form must match
            bool near_knot = false;
            for (double knot : {delta / 2.0, delta, 1.0 / delta, 2.0 / delta})
                near_knot = near_knot || std::fabs(r - knot) < 10 * h;
            if (!near_knot)
                CHECK(eqd::mollifier_rho_prime(delta, r) == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
        }
    }
}

TEST_CASE("range and derivative bound") {
    for (double delta : {0.1, 0.5, 0.9}) {
        double max_prime = 0.0;
        for (int i = 0; i <= 10000; ++i) {
            const double r = i * (2.2 / delta) / 10000.0;
            const double v = eqd::mollifier_rho(delta, r);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0 + 1e-12);
            max_prime = std::max(max_prime, std::fabs(eqd::mollifier_rho_prime(delta, r)));
        }
        CHECK(max_prime <= 3.0 / delta + 1e-12);
        // the bound is nearly attained on the inner ramp
        CHECK(max_prime >= 0.9 * 3.0 / delta);
    }
}

TEST_CASE("f_delta values") {
    for (double theta : {0.0, 0.4, 2.2}) {
        const std::complex<double> z = std::polar(1.0, theta);
        CHECK(std::abs(eqd::f_delta(0.5, SpherePoint::from_affine(z)) - z) < 1e-14);
    }
    CHECK(std::abs(eqd::f_delta(0.5, SpherePoint::infinity())) == 0.0);
    CHECK(std::abs(eqd::f_delta(0.5, SpherePoint::from_affine({3.0, 0.0})) -
                   std::complex<double>(0.5, 0.0)) < 1e-14);
    // support: zero outside the annulus [delta/2, 2/delta]
    CHECK(std::abs(eqd::f_delta(0.5, SpherePoint::from_affine({0.2, 0.0}))) == 0.0);
    CHECK(std::abs(eqd::f_delta(0.5, SpherePoint::from_affine({0.0, 4.1}))) == 0.0);
}

TEST_CASE("f_delta integrates to zero over the circle") {
    for (double delta : {0.3, 0.9071}) {
        std::complex<double> acc = 0.0;
        const int nodes = 1 << 12;
        for (int k = 0; k < nodes; ++k)
            acc += eqd::f_delta(delta,
                                SpherePoint::from_affine(std::polar(1.0, 2 * std::numbers::pi * k / nodes)));
        CHECK(std::abs(acc) / nodes < 1e-10);
    }
}

TEST_CASE("sphere distances") {
    const SpherePoint p = SpherePoint::from_affine({1.0, 0.0});
    auto d0 = eqd::sphere_distance(p, p);
    CHECK(d0.sph == doctest::Approx(0.0));
    CHECK(d0.ch == doctest::Approx(0.0));

    auto anti = eqd::sphere_distance(SpherePoint{1.0, 0.0}, SpherePoint{0.0, 1.0});
    CHECK(anti.sph == doctest::Approx(std::numbers::pi).epsilon(1e-14));
    CHECK(anti.ch == doctest::Approx(2.0).epsilon(1e-14));

    auto pm = eqd::sphere_distance(SpherePoint::from_affine({1.0, 0.0}),
                                   SpherePoint::from_affine({-1.0, 0.0}));
    CHECK(pm.ch == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("chordal and spherical distances compare as claimed") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 20000; ++i) {
        auto draw = [&]() {
            if (unit(rng) < 0.02) return SpherePoint::infinity();
            const double r = std::exp(8.0 * (unit(rng) - 0.5));
            return SpherePoint::from_affine(std::polar(r, 2 * std::numbers::pi * unit(rng)));
        };
        const SpherePoint p = draw(), q = draw();
        const auto d = eqd::sphere_distance(p, q);
        CHECK(d.ch <= d.sph + 1e-12);
        CHECK(2.0 / std::numbers::pi * d.sph <= d.ch + 1e-12);
        // chord-arc identity on the sphere
        CHECK(d.ch == doctest::Approx(2.0 * std::sin(d.sph / 2.0)).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("lipschitz bound formula") {
    CHECK(eqd::fdelta_lipschitz_bound(0.9071) == doctest::Approx(37.2238).epsilon(1e-3));
    CHECK(eqd::fdelta_lipschitz_bound(0.5) ==
          doctest::Approx(2.0 * std::numbers::sqrt2 * 9.25 / 0.125).epsilon(1e-12));
    // leading behaviour ~ 18 sqrt2 / delta^3 for small delta
    CHECK(eqd::fdelta_lipschitz_bound(0.01) ==
          doctest::Approx(18.0 * std::numbers::sqrt2 * 1e6).epsilon(1e-3));
}

TEST_CASE("empirical lipschitz estimates stay below the proven bound") {
    for (double delta : {0.5, 0.9}) {
        const double bound = eqd::fdelta_lipschitz_bound(delta);
        CHECK(eqd::estimate_lipschitz(eqd::fdelta_real(delta), delta, 20000, 7) <= bound + 1e-9);
        CHECK(eqd::estimate_lipschitz(eqd::fdelta_imag(delta), delta, 20000, 8) <= bound + 1e-9);
    }
    // lifted trig polynomial against its own constant
    const std::vector<eqd::TrigTerm> terms{{{1}, 0.6, 0.0}, {{2}, 0.0, -0.3}};
    for (double delta : {0.5, 0.9071}) {
        eqd::SphereFunction f = eqd::lifted_trig(terms, delta);
        CHECK(eqd::estimate_lipschitz(f, delta, 20000, 9) <= f.lip_sph + 1e-9);
    }
}

TEST_CASE("delta optimization reproduces the reported minimum") {
    const eqd::DeltaOptimum opt = eqd::optimize_delta();
    CHECK(opt.delta == doctest::Approx(0.9071).epsilon(2e-4));
    CHECK(opt.value == doctest::Approx(94.9591).epsilon(1e-5));
    CHECK(opt.value / (2.0 * std::numbers::pi) < 16.0);
    CHECK(eqd::delta_objective(0.5) == doctest::Approx(421.49).epsilon(1e-3));
    // the cached optimum agrees
    CHECK(eqd::optimal_delta() == doctest::Approx(opt.delta));
}
