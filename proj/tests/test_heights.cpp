#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "eqd/heights.hpp"

using eqd::AlgebraicPointSpec;
using eqd::IntPolynomial;
using eqd::RatPolynomial;

namespace {

const double kLog2 = std::log(2.0);
// m(Lehmer) = log(1.17628081825991750654...)
const double kLehmerMahler = 0.16235761200775074;

IntPolynomial lehmer() { return IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}; }

}  // namespace

TEST_CASE("Mahler measure via roots") {
    CHECK(eqd::mahler_measure_roots(IntPolynomial{-2, 1}) == doctest::Approx(kLog2).epsilon(1e-12));
    CHECK(std::fabs(eqd::mahler_measure_roots(IntPolynomial{1, 1, 1})) < 1e-9);
    CHECK(eqd::mahler_measure_roots(lehmer()) == doctest::Approx(kLehmerMahler).epsilon(1e-9));
    // m(2x - 1) = log 2 (leading coefficient contributes, the root does not)
    CHECK(eqd::mahler_measure_roots(IntPolynomial{-1, 2}) == doctest::Approx(kLog2).epsilon(1e-12));
}

TEST_CASE("Mahler measure via quadrature") {
    auto q = eqd::mahler_measure_quadrature(IntPolynomial{-2, 1}, 4096);
    CHECK(q.value == doctest::Approx(kLog2).epsilon(1e-9));
    CHECK_FALSE(q.degraded);
    q = eqd::mahler_measure_quadrature(IntPolynomial{-1, 2}, 4096);
    CHECK(q.value == doctest::Approx(kLog2).epsilon(1e-9));

    // roots-method oracle on random degree-6 polynomials away from the circle
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coeff(-10, 10);
    int done = 0;
    while (done < 20) {
        std::vector<mpz_class> cs(7);
        for (auto& c : cs) c = coeff(rng);
        if (cs[0] == 0 || cs[6] == 0) continue;
        IntPolynomial p{std::move(cs)};
        eqd::ComplexRootSet rs;
        try {
            rs = eqd::find_roots(p);
        } catch (const eqd::Error&) {
            continue;
        }
        if (rs.min_circle_distance < 1e-3) continue;
        const double mr = eqd::mahler_measure_roots(p);
        const double mq = eqd::mahler_measure_quadrature(p, 1 << 16).value;
        CHECK(mr == doctest::Approx(mq).epsilon(1e-6));
        // Mahler measures of integer polynomials are nonnegative
        CHECK(mr >= -1e-9);
        CHECK(mq >= -1e-9);
        ++done;
    }
}

TEST_CASE("quadrature flags near-circle roots as degraded") {
    // 10000x - 10001 has a root at 1.0001
    auto q = eqd::mahler_measure_quadrature(IntPolynomial{-10001, 10000}, 4096);
    CHECK(q.degraded);
    CHECK(q.min_circle_distance == doctest::Approx(1e-4).epsilon(1e-6));
}

TEST_CASE("coordinate heights") {
    auto [h2, d2] = eqd::coordinate_height(IntPolynomial{-2, 1});
    CHECK(h2 == doctest::Approx(kLog2).epsilon(1e-12));
    CHECK(d2 == 1);
    auto [hphi, dphi] = eqd::coordinate_height(IntPolynomial{-1, -1, 1});
    CHECK(hphi == doctest::Approx(0.24060591252030387).epsilon(1e-10));  // log(phi)/2
    CHECK(dphi == 2);
    auto [hz, dz] = eqd::coordinate_height(IntPolynomial{1, 1, 1, 1, 1});
    CHECK(std::fabs(hz) < 1e-9);
    CHECK(dz == 4);
}

namespace {

AlgebraicPointSpec sqrt2_sqrt3_point(bool integral_flags) {
    AlgebraicPointSpec spec;
    spec.name = "sqrt2_sqrt3";
    spec.primitive_min_poly = IntPolynomial{1, 0, -10, 0, 1};
    spec.coords.emplace_back(IntPolynomial{0, -9, 0, 1}, 2);
    spec.coords.emplace_back(IntPolynomial{0, 11, 0, -1}, 2);
    if (integral_flags) spec.coord_is_integer = {true, true};
    return spec;
}

}  // namespace

TEST_CASE("point height through all three paths") {
    const double expected = 0.5 * std::log(2.0) + 0.5 * std::log(3.0);

    // resultant-derived minimal polynomials
    AlgebraicPointSpec spec = sqrt2_sqrt3_point(false);
    eqd::GaloisOrbit orbit = eqd::enumerate_orbit(spec);
    eqd::HeightReport rep = eqd::point_height(spec, orbit);
    CHECK(rep.total_h == doctest::Approx(expected).epsilon(1e-10));
    CHECK(rep.per_coordinate[0].method == eqd::HeightMethod::Roots);
    CHECK(rep.per_coordinate[0].note.find("resultant") != std::string::npos);

    // algebraic-integer orbit formula
    AlgebraicPointSpec fast = sqrt2_sqrt3_point(true);
    eqd::HeightReport rep_fast = eqd::point_height(fast, orbit);
    CHECK(rep_fast.total_h == doctest::Approx(expected).epsilon(1e-10));
    CHECK(rep_fast.per_coordinate[0].method == eqd::HeightMethod::OrbitInteger);

    // supplied minimal polynomials
    AlgebraicPointSpec supplied = sqrt2_sqrt3_point(false);
    supplied.coord_min_polys = {IntPolynomial{-2, 0, 1}, IntPolynomial{-3, 0, 1}};
    eqd::HeightReport rep_sup = eqd::point_height(supplied, orbit);
    CHECK(rep_sup.total_h == doctest::Approx(expected).epsilon(1e-12));

    // quadrature agrees
    eqd::HeightReport rep_quad = eqd::point_height(supplied, orbit, eqd::HeightMethod::Quadrature);
    CHECK(rep_quad.total_h == doctest::Approx(expected).epsilon(1e-7));
    CHECK(rep_quad.per_coordinate[0].method == eqd::HeightMethod::Quadrature);
}

TEST_CASE("roots of unity have zero height") {
    AlgebraicPointSpec spec;
    spec.name = "zeta5_zeta7";
    spec.mode = eqd::PointMode::Product;
    spec.coord_min_polys = {eqd::cyclotomic(5), eqd::cyclotomic(7)};
    spec.product_degree_asserted = true;
    eqd::GaloisOrbit orbit = eqd::enumerate_orbit(spec);
    CHECK(orbit.cardinality == 24);
    eqd::HeightReport rep = eqd::point_height(spec, orbit);
    CHECK(std::fabs(rep.total_h) < 1e-9);
}

TEST_CASE("height is unavailable outside every path") {
    AlgebraicPointSpec spec;
    spec.name = "big";
    std::vector<mpz_class> cs(14, mpz_class(0));
    cs[0] = -2;
    cs[13] = 1;
    spec.primitive_min_poly = IntPolynomial{std::move(cs)};
    spec.coords.emplace_back(IntPolynomial{0, 1}, 2);  // gamma/2, not an algebraic integer
    eqd::GaloisOrbit orbit = eqd::enumerate_orbit(spec);
    CHECK_THROWS_WITH_AS(static_cast<void>(eqd::point_height(spec, orbit)),
                         doctest::Contains("unavailable"), eqd::Error);
}

TEST_CASE("set height") {
    CHECK(eqd::set_height({{2, 0.5 * kLog2}}) == doctest::Approx(kLog2));
    CHECK(eqd::set_height({{4, 0.0}}) == 0.0);
    CHECK(eqd::set_height({{2, 0.5 * std::log(2.0)}, {2, 0.5 * std::log(3.0)}}) ==
          doctest::Approx(std::log(6.0)).epsilon(1e-12));
}

TEST_CASE("log-sum bound over orbits") {
    AlgebraicPointSpec spec = sqrt2_sqrt3_point(true);
    eqd::GaloisOrbit orbit = eqd::enumerate_orbit(spec);
    eqd::HeightReport rep = eqd::point_height(spec, orbit);
    eqd::LogSumCheck chk = eqd::check_log_sum(orbit, rep.total_h);
    CHECK(chk.ok);
    CHECK(chk.lhs == doctest::Approx(0.5 * std::log(2.0) + 0.5 * std::log(3.0)).epsilon(1e-10));
    CHECK(chk.bound == doctest::Approx(2.0 * rep.total_h));
}

TEST_CASE("tail count bound") {
    eqd::ComplexRootSet zeta5 = eqd::find_roots(eqd::cyclotomic(5));
    auto chk = eqd::check_tail_count(zeta5, 0.5, 0.0);
    CHECK(chk.count == 0);
    CHECK(chk.ok);

    // delta = 0.6 keeps |log 2| strictly above the cutoff (delta = 0.5 sits
    // exactly on the boundary of the strict inequality defining S_delta)
    eqd::ComplexRootSet two = eqd::find_roots(IntPolynomial{-2, 1});
    chk = eqd::check_tail_count(two, 0.6, kLog2);
    CHECK(chk.count == 1);
    CHECK(chk.bound == doctest::Approx(2.0 * kLog2 / std::log(1.0 / 0.6)));
    CHECK(chk.ok);

    eqd::ComplexRootSet leh = eqd::find_roots(lehmer());
    chk = eqd::check_tail_count(leh, 0.9, 10.0 * (kLehmerMahler / 10.0));
    CHECK(chk.count == 2);  // lambda and 1/lambda
    CHECK(chk.ok);
    CHECK_THROWS(eqd::check_tail_count(leh, 1.5, 1.0));
}

TEST_CASE("power rule h(alpha^n) = |n| h(alpha) via the orbit formula") {
    for (const IntPolynomial& p : {IntPolynomial{-2, 0, 0, 1}, lehmer(), IntPolynomial{-1, -1, 1}}) {
        AlgebraicPointSpec spec;
        spec.name = "pow";
        spec.primitive_min_poly = p;
        spec.coords.emplace_back(IntPolynomial{0, 1}, 1);
        eqd::GaloisOrbit orbit = eqd::enumerate_orbit(spec);
        const double h1 = eqd::coordinate_height(p).first;
        // alpha^n stays an algebraic integer for n > 0; for negative n only
        // when alpha is a unit, so the orbit formula applies there alone
        std::vector<int> exponents{2, 3, 5};
        mpz_class a0 = p.constant_term();
        if (a0 == 1 || a0 == -1) exponents.push_back(-2);
        for (int n : exponents) {
            auto img = eqd::monomial_image(orbit, std::vector<int>{n});
            std::vector<double> logs;
            for (const auto& [u, theta] : img.representatives) logs.push_back(std::max(0.0, u));
            const double hn = eqd::pairwise_sum(logs) / img.distinct_count;
            CHECK(hn == doctest::Approx(std::abs(n) * h1).epsilon(1e-8));
        }
    }
}

TEST_CASE("Vieta: product of root moduli equals |a0| for monic polynomials") {
    for (const IntPolynomial& p : {lehmer(), IntPolynomial{-2, 0, 1}, IntPolynomial{-1, -1, 1}}) {
        eqd::ComplexRootSet rs = eqd::find_roots(p);
        double prod = 1.0;
        for (const auto& r : rs.roots) prod *= std::abs(r);
        CHECK(prod == doctest::Approx(std::fabs(p.constant_term().get_d())).epsilon(1e-8));
    }
}

TEST_CASE("non-cyclotomic corpus entries sit above the desk-scale Lehmer gap") {
    for (const IntPolynomial& p : {lehmer(), IntPolynomial{-1, -1, 1}, IntPolynomial{-2, 0, 0, 1},
                                   IntPolynomial{1, -1, -1, -1, 1}}) {
        CHECK(eqd::coordinate_height(p).first > 1e-4);
    }
    for (int m : {3, 4, 5, 12, 15}) {
        CHECK(std::fabs(eqd::coordinate_height(eqd::cyclotomic(m)).first) < 1e-9);
    }
}
