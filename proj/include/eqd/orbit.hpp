#ifndef EQD_ORBIT_HPP
#define EQD_ORBIT_HPP

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqd/int_polynomial.hpp"
#include "eqd/roots.hpp"

namespace eqd {

enum class PointMode { Primitive, Product };

/// A point xi in (Qbar^x)^N, presented either through a primitive element
/// gamma (minimal polynomial plus coordinate expressions xi_l = g_l(gamma))
/// or, in product mode, through N independent coordinate minimal polynomials
/// together with the asserted compositum degree = product of degrees.
struct AlgebraicPointSpec {
    PointMode mode = PointMode::Primitive;
    std::string name;

    // primitive mode
    IntPolynomial primitive_min_poly;
    std::vector<RatPolynomial> coords;

    // optional user-supplied coordinate minimal polynomials (required in product mode)
    std::vector<IntPolynomial> coord_min_polys;
    // user declaration that a coordinate is an algebraic integer
    std::vector<bool> coord_is_integer;

    bool product_degree_asserted = false;

    int dimension() const;
    void validate() const;
    std::vector<std::string> provenance() const;
};

/// The D numeric Galois conjugates of a point, with logarithmic-polar data.
struct GaloisOrbit {
    int dimension = 0;    // N
    int cardinality = 0;  // D
    std::vector<std::vector<std::complex<double>>> points;  // D x N
    std::vector<std::vector<double>> angles;                // D x N, arg/2pi in [0,1)
    std::vector<std::vector<double>> log_moduli;            // D x N
    double error_radius = 0.0;
    std::vector<std::string> provenance;  // representation notes, carried into reports
};

GaloisOrbit enumerate_orbit(const AlgebraicPointSpec& spec, double precision = 1e-12);

/// The D values chi^n(alpha) over the orbit, kept in log-polar form
/// (log-modulus, angle) so large exponents never overflow, together with the
/// distinct count deg_n and multiplicity l_n (l_n * deg_n = D exactly).
struct MonomialImage {
    std::vector<int> exponent;                       // n
    std::vector<std::pair<double, double>> values;   // (u, theta) per orbit point
    std::vector<int> cluster_of;                     // orbit index -> cluster id
    std::vector<std::pair<double, double>> representatives;  // one per cluster
    int multiplicity = 0;    // l_n
    int distinct_count = 0;  // deg_n
    double cluster_threshold = 0.0;
    double cluster_separation = 0.0;  // min distance between distinct clusters
};

MonomialImage monomial_image(const GaloisOrbit& orbit, std::span<const int> n);

/// deg(chi^n(xi)) = distinct value count of the monomial image.
int monomial_degree(const GaloisOrbit& orbit, std::span<const int> n);

}  // namespace eqd

#endif
