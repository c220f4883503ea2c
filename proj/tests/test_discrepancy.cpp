#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eqd/discrepancy.hpp"

using eqd::AlgebraicPointSpec;
using eqd::IntPolynomial;
using eqd::TestFunction;
using eqd::TrigTerm;

namespace {

AlgebraicPointSpec one_dim(const std::string& name, IntPolynomial p) {
    AlgebraicPointSpec spec;
    spec.name = name;
    spec.primitive_min_poly = std::move(p);
    spec.coords.emplace_back(IntPolynomial{0, 1}, 1);
    spec.coord_is_integer = {true};
    return spec;
}

TestFunction cos_1d() { return TestFunction::trig_bump(1, {TrigTerm{{1}, 1.0, 0.0}}, 1.0); }

}  // namespace

TEST_CASE("orbit averages") {
    eqd::PointAnalysis z3 = eqd::analyze_point(one_dim("zeta3", IntPolynomial{1, 1, 1}));
    CHECK(eqd::orbit_average(TestFunction::constant(1, 1.0), z3.orbit) == doctest::Approx(1.0));
    CHECK(eqd::orbit_average(cos_1d(), z3.orbit) == doctest::Approx(-0.5).epsilon(1e-12));

    // support: a narrow bump vanishes at u = log 2
    eqd::PointAnalysis two = eqd::analyze_point(one_dim("two", IntPolynomial{-2, 1}));
    TestFunction narrow = TestFunction::trig_bump(1, {TrigTerm{{0}, 1.0, 0.0}}, 0.5);
    CHECK(eqd::orbit_average(narrow, two.orbit) == 0.0);
}

TEST_CASE("main theorem report on a cyclotomic point") {
    eqd::PointAnalysis pa = eqd::analyze_point(one_dim("zeta7", eqd::cyclotomic(7)));
    TestFunction f = cos_1d();
    eqd::SpectrumTable table = eqd::fourier_coeffs(f, 256, 16);
    eqd::OrbitSpectrum nu = eqd::fourier_stieltjes(pa.orbit, 16);
    eqd::DiscrepancyReport rep = eqd::theorem_main(pa, f, table, nu);
    CHECK(rep.precondition_h);
    REQUIRE(rep.ok.has_value());
    CHECK(*rep.ok);
    // sum of cos(2 pi j / 7) over j = 1..6 is -1
    CHECK(rep.lhs == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
    CHECK(rep.t1 == doctest::Approx(0.0));            // points on the unit circle
    CHECK(rep.t2 == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
    CHECK(rep.t2_pairing == doctest::Approx(rep.t2).epsilon(1e-9));
    CHECK(rep.lhs <= rep.t1 + rep.t2 + 1e-9);
    CHECK(rep.t1 <= rep.t1_bound + 1e-9);
    CHECK(rep.t2 <= rep.t2_bound + 1e-9);
    CHECK(rep.rhs_tight <= rep.rhs + 1e-9);  // the tight constant is stronger here
}

TEST_CASE("main theorem on a point with positive height") {
    eqd::PointAnalysis pa = eqd::analyze_point(one_dim("two", IntPolynomial{-2, 1}));
    TestFunction f = cos_1d();
    eqd::SpectrumTable table = eqd::fourier_coeffs(f, 256, 16);
    eqd::OrbitSpectrum nu = eqd::fourier_stieltjes(pa.orbit, 16);
    eqd::DiscrepancyReport rep = eqd::theorem_main(pa, f, table, nu);
    CHECK(rep.h == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(rep.gendeg == 1);
    CHECK(rep.rhs == doctest::Approx(rep.c_of_f * std::sqrt(4.0 * std::log(2.0) +
                                                            64.0 * std::log(2.0))));
    REQUIRE(rep.ok.has_value());
    CHECK(*rep.ok);
}

TEST_CASE("constant test function gives zero on both sides") {
    eqd::PointAnalysis pa = eqd::analyze_point(one_dim("golden", IntPolynomial{-1, -1, 1}));
    TestFunction f = TestFunction::constant(1, 2.5);
    eqd::SpectrumTable table = eqd::fourier_coeffs(f, 64, 8);
    eqd::OrbitSpectrum nu = eqd::fourier_stieltjes(pa.orbit, 8);
    eqd::DiscrepancyReport rep = eqd::theorem_main(pa, f, table, nu);
    CHECK(rep.lhs == doctest::Approx(0.0));
    CHECK(rep.c_of_f == doctest::Approx(0.0));
    CHECK(*rep.ok);
}

TEST_CASE("h > 1 emits a flagged report without a verdict") {
    eqd::PointAnalysis pa = eqd::analyze_point(one_dim("five", IntPolynomial{-5, 1}));
    TestFunction f = cos_1d();
    eqd::SpectrumTable table = eqd::fourier_coeffs(f, 256, 16);
    eqd::OrbitSpectrum nu = eqd::fourier_stieltjes(pa.orbit, 16);
    eqd::DiscrepancyReport rep = eqd::theorem_main(pa, f, table, nu);
    CHECK_FALSE(rep.precondition_h);
    CHECK_FALSE(rep.ok.has_value());
    CHECK(rep.h > 1.0);
    // the attached sphere bounds hold without any height restriction
    REQUIRE(rep.fallback_1d.size() == 2);
    for (const auto& chk : rep.fallback_1d) CHECK(chk.ok);
    bool flagged = false;
    for (const auto& note : rep.provenance) flagged = flagged || note.find("h > 1") != std::string::npos;
    CHECK(flagged);
}

TEST_CASE("one-dimensional bound") {
    eqd::ComplexRootSet z7 = eqd::find_roots(eqd::cyclotomic(7));
    const auto [h7, d7] = eqd::coordinate_height(eqd::cyclotomic(7));
    const eqd::FrlCheck cyc = eqd::frl_bound_1d(z7, h7, d7, eqd::fdelta_real(0.9071));
    CHECK(cyc.ok);
    CHECK(cyc.lhs < 0.2);

    // a constant sphere function has lhs 0 with zero Lipschitz constant
    eqd::SphereFunction constant{"const", 0.0, [](const eqd::SpherePoint&) { return 0.7; }};
    const eqd::FrlCheck c = eqd::frl_bound_1d(z7, h7, d7, constant);
    CHECK(c.lhs == doctest::Approx(0.0));
    CHECK(c.ok);

    // Lehmer's number at delta = 0.9
    IntPolynomial lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
    eqd::ComplexRootSet rl = eqd::find_roots(lehmer);
    const auto [hl, dl] = eqd::coordinate_height(lehmer);
    CHECK(eqd::frl_bound_1d(rl, hl, dl, eqd::fdelta_real(0.9)).ok);
    CHECK(eqd::frl_bound_1d(rl, hl, dl, eqd::fdelta_imag(0.9)).ok);
}

TEST_CASE("nu-hat bound checks") {
    eqd::PointAnalysis z3 = eqd::analyze_point(one_dim("zeta3", IntPolynomial{1, 1, 1}));
    eqd::OrbitSpectrum nu = eqd::fourier_stieltjes(z3.orbit, 5);
    const eqd::NuHatCheck chk =
        eqd::nu_hat_bound_check(nu, z3.height.total_h, z3.gendeg.value, std::vector<int>{1}, 0.9);
    CHECK(chk.lhs == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(chk.ok);
    CHECK(chk.rhs > 1.0);

    CHECK_THROWS(eqd::nu_hat_bound_check(nu, 2.0, 2, std::vector<int>{1}, 0.9));
    CHECK_THROWS(eqd::nu_hat_bound_check(nu, 0.0, 2, std::vector<int>{0}, 0.9));
}

TEST_CASE("radical sweep") {
    TestFunction f = cos_1d();
    eqd::SpectrumTable table = eqd::fourier_coeffs(f, 256, 16);
    auto rows = eqd::sweep_family(eqd::Family::Radical, 10, 2, f, table);
    REQUIRE(rows.size() == 10);
    for (const auto& row : rows) {
        CHECK(row.error.empty());
        CHECK(row.h == doctest::Approx(std::log(2.0) / row.k).epsilon(1e-10));
        CHECK(row.slack >= 0.0);
    }
}

TEST_CASE("cyclotomic sweep lhs is exactly 1/(p-1) for the cos*cos builtin") {
    TestFunction f =
        TestFunction::trig_bump(2, {TrigTerm{{1, 1}, 0.5, 0.0}, TrigTerm{{1, -1}, 0.5, 0.0}}, 1.0);
    eqd::SpectrumTable table = eqd::fourier_coeffs(f, 64, 8);
    auto rows = eqd::sweep_family(eqd::Family::Cyclotomic, 13, 2, f, table);
    REQUIRE(rows.size() == 5);  // p in {3, 5, 7, 11, 13}
    for (const auto& row : rows) {
        CHECK(row.error.empty());
        CHECK(row.h == doctest::Approx(0.0));
        if (row.k > 3) CHECK(row.lhs == doctest::Approx(1.0 / (row.k - 1)).epsilon(1e-9));
        CHECK(row.slack >= 0.0);
    }
    CHECK(rows.back().lhs < rows[1].lhs);

    // wrong dimension is rejected
    CHECK_THROWS(eqd::sweep_family(eqd::Family::Cyclotomic, 13, 2, cos_1d(),
                                   eqd::fourier_coeffs(cos_1d(), 64, 8)));
}

TEST_CASE("three-dimensional points work end to end") {
    // sqrt2 stays quadratic over Q(zeta_35), so the compositum degree is the product
    AlgebraicPointSpec spec;
    spec.name = "zeta5_zeta7_sqrt2";
    spec.mode = eqd::PointMode::Product;
    spec.coord_min_polys = {eqd::cyclotomic(5), eqd::cyclotomic(7), IntPolynomial{-2, 0, 1}};
    spec.coord_is_integer = {true, true, true};
    spec.product_degree_asserted = true;
    eqd::PointAnalysis pa = eqd::analyze_point(spec);
    CHECK(pa.orbit.cardinality == 48);
    CHECK(pa.height.total_h == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-10));
    CHECK(pa.gendeg.value == 2);  // the radical coordinate squares into Q

    TestFunction f = TestFunction::trig_bump(3, {TrigTerm{{1, 0, 0}, 1.0, 0.0}}, 1.0);
    eqd::SpectrumTable table = eqd::fourier_coeffs(f, 32, 8);
    eqd::OrbitSpectrum nu = eqd::fourier_stieltjes(pa.orbit, 8);
    eqd::DiscrepancyReport rep = eqd::theorem_main(pa, f, table, nu);
    REQUIRE(rep.ok.has_value());
    CHECK(*rep.ok);
    CHECK(rep.lhs <= rep.t1 + rep.t2 + 1e-9);
}

TEST_CASE("mixed sweep") {
    TestFunction f = TestFunction::trig_bump(2, {TrigTerm{{1, 0}, 1.0, 0.0}}, 1.0);
    eqd::SpectrumTable table = eqd::fourier_coeffs(f, 64, 8);
    auto rows = eqd::sweep_family(eqd::Family::Mixed, 11, 2, f, table);
    REQUIRE(rows.size() == 4);  // p in {2, 5, 7, 11}
    for (const auto& row : rows) {
        CHECK(row.error.empty());
        CHECK(row.h == doctest::Approx(std::log(2.0) / 3.0).epsilon(1e-9));
        CHECK(row.slack >= 0.0);
    }
}
