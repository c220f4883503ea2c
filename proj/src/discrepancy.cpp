#include "eqd/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace eqd {

PointAnalysis analyze_point(const AlgebraicPointSpec& spec, double precision) {
    PointAnalysis pa;
    pa.spec = spec;
    pa.orbit = enumerate_orbit(spec, precision);
    pa.height = point_height(spec, pa.orbit);
    pa.gendeg = generalized_degree(pa.orbit);
    return pa;
}

double orbit_average(const TestFunction& f, const GaloisOrbit& orbit) {
    std::vector<double> vals(orbit.cardinality);
    for (int j = 0; j < orbit.cardinality; ++j)
        vals[j] = f.value(orbit.angles[j], orbit.log_moduli[j]);
    return pairwise_sum(vals) / orbit.cardinality;
}

double torus_average(const TestFunction& f, const GaloisOrbit& orbit) {
    std::vector<double> vals(orbit.cardinality);
    for (int j = 0; j < orbit.cardinality; ++j) vals[j] = f.torus_value(orbit.angles[j]);
    return pairwise_sum(vals) / orbit.cardinality;
}

namespace {

double main_sqrt_factor(double h, long long gendeg) {
    return std::sqrt(4.0 * h + kMainC * std::log(static_cast<double>(gendeg) + 1.0) / gendeg);
}

}  // namespace

DiscrepancyReport theorem_main(const PointAnalysis& pa, const TestFunction& f,
                               const SpectrumTable& table, const OrbitSpectrum& orbit_spectrum) {
    if (f.dimension() != pa.orbit.dimension)
        throw Error("theorem_main: test function dimension does not match the point");
    if (pa.gendeg.value < 1) throw Error("theorem_main: missing ingredient: generalized degree");

    DiscrepancyReport rep;
    rep.provenance = pa.orbit.provenance;
    if (f.unverified_smoothness())
        rep.provenance.push_back("test function smoothness class is declared, not certified");
    rep.h = pa.height.total_h;
    rep.gendeg = pa.gendeg.value;
    rep.orbit_size = pa.orbit.cardinality;

    const COfF c = c_of_F(f, table);
    if (!std::isfinite(c.value)) throw Error("theorem_main: missing ingredient: finite c(F)");
    rep.c_of_f = c.value;

    const double mu_avg = orbit_average(f, pa.orbit);
    const double nu_avg = torus_average(f, pa.orbit);
    const double haar = haar_integral(table);
    rep.lhs = std::fabs(mu_avg - haar);
    rep.t1 = std::fabs(mu_avg - nu_avg);
    rep.t2 = std::fabs(nu_avg - haar);
    rep.t1_bound = 2.0 * f.lip() * rep.h;

    const PairingResult pairing = pair_spectra(table, orbit_spectrum);
    rep.t2_pairing = std::abs(pairing.value);
    rep.pairing_tail = pairing.tail_bound;

    const double sqrt_factor = main_sqrt_factor(rep.h, rep.gendeg);
    const double dstar = optimal_delta();
    rep.t2_bound = (1.0 / (2.0 * std::numbers::pi)) * delta_objective(dstar) * sqrt_factor *
                   (c.deriv_l1 + c.deriv_tail);

    rep.precondition_h = rep.h <= 1.0;
    rep.rhs = rep.c_of_f * sqrt_factor;
    rep.rhs_tight = 2.0 * f.lip() * rep.h +
                    (kDeltaObjectiveMin / (2.0 * std::numbers::pi)) * sqrt_factor *
                        (c.deriv_l1 + c.deriv_tail);
    if (rep.precondition_h) {
        rep.ok = rep.lhs <= rep.rhs + 1e-9;
    } else if (pa.orbit.dimension == 1) {
        // the sphere-side bound holds for any height; attach it at delta*
        std::vector<std::complex<double>> conj;
        const MonomialImage img = monomial_image(pa.orbit, std::vector<int>{1});
        for (const auto& [u, theta] : img.representatives)
            conj.push_back(std::polar(std::exp(u), 2.0 * std::numbers::pi * theta));
        const double h1 = pa.height.per_coordinate[0].h;
        const int d1 = pa.height.per_coordinate[0].degree;
        for (const SphereFunction& g : {fdelta_real(dstar), fdelta_imag(dstar)})
            rep.fallback_1d.push_back(frl_bound_1d(conj, h1, d1, g));
        rep.provenance.push_back(
            "h > 1: the main bound does not apply; one-dimensional sphere bounds attached "
            "(no height restriction)");
    }
    return rep;
}

FrlCheck frl_bound_1d(std::span<const std::complex<double>> orbit_1d, double h, int deg,
                      const SphereFunction& f) {
    // Haar side by circle quadrature (trapezoidal on equispaced nodes).
    const int nodes = 4096;
    std::vector<double> qs(nodes);
    for (int k = 0; k < nodes; ++k)
        qs[k] = f.eval(SpherePoint::from_affine(std::polar(1.0, 2.0 * std::numbers::pi * k / nodes)));
    const double haar = pairwise_sum(qs) / nodes;

    std::vector<double> vals(orbit_1d.size());
    for (std::size_t j = 0; j < orbit_1d.size(); ++j)
        vals[j] = f.eval(SpherePoint::from_affine(orbit_1d[j]));
    const double avg = pairwise_sum(vals) / static_cast<double>(vals.size());

    FrlCheck out;
    out.function_name = f.name;
    out.lhs = std::fabs(avg - haar);
    out.rhs = f.lip_sph * (std::numbers::pi / deg +
                           std::sqrt(4.0 * h + kFrlC0 * std::log(deg + 1.0) / deg));
    out.ok = out.lhs <= out.rhs + 1e-9;
    return out;
}

FrlCheck frl_bound_1d(const ComplexRootSet& orbit_1d, double h, int deg, const SphereFunction& f) {
    return frl_bound_1d(std::span<const std::complex<double>>(orbit_1d.roots), h, deg, f);
}

NuHatCheck nu_hat_bound_check(const OrbitSpectrum& spectrum, double h, long long gendeg,
                              std::span<const int> n, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw Error("nu_hat_bound_check: delta must lie in (0,1)");
    if (h > 1.0) throw Error("nu_hat_bound_check: requires h <= 1");
    double n1 = 0.0;
    for (int v : n) n1 += std::abs(v);
    if (n1 == 0.0) throw Error("nu_hat_bound_check: n must be nonzero");
    NuHatCheck out;
    out.lhs = std::abs(spectrum.at(n));
    out.rhs = (-2.0 / std::log(delta)) * n1 * h +
              (4.0 * std::numbers::sqrt2 * (delta * delta + 9.0) / (delta * delta * delta)) * n1 *
                  main_sqrt_factor(h, gendeg);
    out.ok = out.lhs <= out.rhs + 1e-9;
    return out;
}

AlgebraicPointSpec cyclotomic_pair_point(int p, int a) {
    AlgebraicPointSpec spec;
    spec.mode = PointMode::Primitive;
    spec.name = "cyclotomic_p" + std::to_string(p) + "_a" + std::to_string(a);
    spec.primitive_min_poly = cyclotomic(p);
    std::vector<mpz_class> id{0, 1};
    spec.coords.emplace_back(IntPolynomial(id), mpz_class(1));
    std::vector<mpz_class> pow(a + 1, mpz_class(0));
    pow[a] = 1;
    spec.coords.emplace_back(IntPolynomial(std::move(pow)), mpz_class(1));
    spec.coord_is_integer = {true, true};
    return spec;
}

AlgebraicPointSpec radical_point(int k) {
    AlgebraicPointSpec spec;
    spec.mode = PointMode::Primitive;
    spec.name = "radical_2_1over" + std::to_string(k);
    std::vector<mpz_class> cs(k + 1, mpz_class(0));
    cs[0] = -2;
    cs[k] = 1;
    spec.primitive_min_poly = IntPolynomial(std::move(cs));
    std::vector<mpz_class> id{0, 1};
    spec.coords.emplace_back(IntPolynomial(id), mpz_class(1));
    spec.coord_is_integer = {true};
    return spec;
}

AlgebraicPointSpec mixed_point(int p) {
    AlgebraicPointSpec spec;
    spec.mode = PointMode::Product;
    spec.name = "mixed_zeta" + std::to_string(p) + "_cbrt2";
    spec.coord_min_polys.push_back(cyclotomic(p));
    spec.coord_min_polys.push_back(IntPolynomial({-2, 0, 0, 1}));
    spec.coord_is_integer = {true, true};
    spec.product_degree_asserted = true;  // x^3-2 stays irreducible over the abelian field Q(zeta_p)
    return spec;
}

std::vector<SweepRow> sweep_family(Family family, int limit, int a, const TestFunction& f,
                                   const SpectrumTable& table, double precision) {
    std::vector<AlgebraicPointSpec> members;
    std::vector<int> ks;
    auto is_prime = [](int p) {
        if (p < 2) return false;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) return false;
        return true;
    };
    switch (family) {
        case Family::Cyclotomic:
            for (int p = 3; p <= limit; ++p)
                if (is_prime(p)) {
                    members.push_back(cyclotomic_pair_point(p, a));
                    ks.push_back(p);
                }
            break;
        case Family::Radical:
            for (int k = 1; k <= limit; ++k) {
                members.push_back(radical_point(k));
                ks.push_back(k);
            }
            break;
        case Family::Mixed:
            for (int p = 2; p <= limit; ++p)
                if (is_prime(p) && p != 3) {
                    members.push_back(mixed_point(p));
                    ks.push_back(p);
                }
            break;
    }
    const int expected_dim = family == Family::Radical ? 1 : 2;
    if (f.dimension() != expected_dim)
        throw Error("sweep_family: this family needs a test function of dimension " +
                    std::to_string(expected_dim));

    std::vector<SweepRow> rows(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        SweepRow& row = rows[i];
        row.k = ks[i];
        try {
            PointAnalysis pa = analyze_point(members[i], precision);
            OrbitSpectrum nu = fourier_stieltjes(pa.orbit, table.box);
            DiscrepancyReport rep = theorem_main(pa, f, table, nu);
            row.h = rep.h;
            row.gendeg = rep.gendeg;
            row.lhs = rep.lhs;
            row.rhs = rep.rhs;
            row.slack = rep.rhs - rep.lhs;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    }
    return rows;
}

}  // namespace eqd
