#ifndef EQD_HEIGHTS_HPP
#define EQD_HEIGHTS_HPP

#include <string>
#include <vector>

#include "eqd/orbit.hpp"

namespace eqd {

enum class HeightMethod { Roots, Quadrature, OrbitInteger };

const char* height_method_name(HeightMethod m);

struct CoordinateHeight {
    double h = 0.0;
    int degree = 0;
    HeightMethod method = HeightMethod::Roots;
    double mahler = 0.0;
    std::string note;  // degraded modes, derived minimal polynomials, ...
};

struct HeightReport {
    std::vector<CoordinateHeight> per_coordinate;
    double total_h = 0.0;
    std::vector<std::string> provenance;
};

/// Mahler measure by Jensen's formula over the computed roots:
/// m(p) = log|a_d| + sum log max(1, |root|).
double mahler_measure_roots(const IntPolynomial& p, const RootOptions& opts = {});

struct QuadratureResult {
    double value = 0.0;
    double min_circle_distance = 0.0;
    bool degraded = false;  // a root within 1e-3 of the unit circle
};

/// Mahler measure by the trapezoidal rule on equispaced circle nodes.
QuadratureResult mahler_measure_quadrature(const IntPolynomial& p, int nodes);

/// Weil height of the algebraic number with the given minimal polynomial.
std::pair<double, int> coordinate_height(const IntPolynomial& min_poly, const RootOptions& opts = {});

/// Height of a point: sum of coordinate heights. Per coordinate the method is
/// a supplied minimal polynomial, the algebraic-integer orbit formula, or an
/// exact resultant-derived minimal polynomial (primitive degree <= 12).
HeightReport point_height(const AlgebraicPointSpec& spec, const GaloisOrbit& orbit,
                          HeightMethod preferred = HeightMethod::Roots, int quadrature_nodes = 1 << 16);

/// Height of a Galois-invariant set given as disjoint orbits: sum of D_i * h_i.
double set_height(const std::vector<std::pair<int, double>>& orbit_degree_and_height);

struct LogSumCheck {
    double lhs = 0.0;
    double bound = 0.0;
    bool ok = false;
};

/// (1/D) sum_l sum_j |log|xi_{j,l}|| <= 2 h(xi).
LogSumCheck check_log_sum(const GaloisOrbit& orbit, double h_total);

struct TailCountCheck {
    long long count = 0;
    double bound = 0.0;
    bool ok = false;
};

/// #{alpha : |log|alpha|| > log(1/delta)} < 2 (log 1/delta)^{-1} h(S).
TailCountCheck check_tail_count(const ComplexRootSet& orbit_1d, double delta, double set_h);

}  // namespace eqd

#endif
