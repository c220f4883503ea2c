#include "eqd/heights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace eqd {

const char* height_method_name(HeightMethod m) {
    switch (m) {
        case HeightMethod::Roots: return "roots";
        case HeightMethod::Quadrature: return "quadrature";
        case HeightMethod::OrbitInteger: return "orbit-integer";
    }
    return "?";
}

double mahler_measure_roots(const IntPolynomial& p, const RootOptions& opts) {
    ComplexRootSet rs = find_roots(p, opts);
    std::vector<double> terms;
    terms.reserve(rs.roots.size() + 1);
    terms.push_back(std::log(std::fabs(p.leading().get_d())));
    for (const auto& r : rs.roots) {
        double a = std::abs(r);
        terms.push_back(a > 1.0 ? std::log(a) : 0.0);
    }
    return pairwise_sum(terms);
}

QuadratureResult mahler_measure_quadrature(const IntPolynomial& p, int nodes) {
    if (nodes < 1) throw Error("mahler_measure_quadrature: node count must be positive");
    RootOptions ropts;
    ropts.require_nonzero_constant = false;
    ComplexRootSet rs = find_roots(p, ropts);
    QuadratureResult out;
    out.min_circle_distance = rs.min_circle_distance;
    out.degraded = rs.min_circle_distance < 1e-3;
    std::vector<double> terms(nodes);
    for (int k = 0; k < nodes; ++k) {
        double theta = 2.0 * std::numbers::pi * k / nodes;
        std::complex<double> v = p.eval(std::polar(1.0, theta));
        terms[k] = std::log(std::abs(v));
    }
    out.value = pairwise_sum(terms) / nodes;
    return out;
}

std::pair<double, int> coordinate_height(const IntPolynomial& min_poly, const RootOptions& opts) {
    if (min_poly.degree() < 1) throw Error("coordinate_height: degree must be >= 1");
    double m = mahler_measure_roots(min_poly, opts);
    return {m / min_poly.degree(), min_poly.degree()};
}

HeightReport point_height(const AlgebraicPointSpec& spec, const GaloisOrbit& orbit,
                          HeightMethod preferred, int quadrature_nodes) {
    const int N = orbit.dimension;
    HeightReport rep;
    rep.provenance = orbit.provenance;
    rep.per_coordinate.resize(N);

    for (int l = 0; l < N; ++l) {
        CoordinateHeight& ch = rep.per_coordinate[l];
        IntPolynomial min_poly;
        bool have_poly = false;
        if (l < static_cast<int>(spec.coord_min_polys.size()) && !spec.coord_min_polys[l].is_zero()) {
            min_poly = spec.coord_min_polys[l];
            have_poly = true;
        }

        const bool integral_declared =
            l < static_cast<int>(spec.coord_is_integer.size()) && spec.coord_is_integer[l];
        const bool can_derive =
            spec.mode == PointMode::Primitive && spec.primitive_min_poly.degree() <= 12;
        // The quadrature method needs an actual polynomial, so a derivable one
        // wins over the algebraic-integer orbit formula there.
        if (!have_poly && preferred == HeightMethod::Quadrature && can_derive) {
            min_poly = coordinate_min_poly(spec.primitive_min_poly, spec.coords[l]);
            have_poly = true;
            ch.note = "minimal polynomial derived by exact resultant";
        }
        if (!have_poly && integral_declared) {
            // Algebraic-integer fast path: distinct conjugates from the orbit.
            std::vector<int> e(N, 0);
            e[l] = 1;
            MonomialImage img = monomial_image(orbit, e);
            std::vector<double> terms;
            terms.reserve(img.representatives.size());
            for (const auto& [u, theta] : img.representatives) terms.push_back(std::max(0.0, u));
            ch.degree = img.distinct_count;
            ch.mahler = pairwise_sum(terms);
            ch.h = ch.mahler / ch.degree;
            ch.method = HeightMethod::OrbitInteger;
            ch.note = "declared algebraic integer";
            continue;
        }

        if (!have_poly && can_derive) {
            min_poly = coordinate_min_poly(spec.primitive_min_poly, spec.coords[l]);
            have_poly = true;
            ch.note = "minimal polynomial derived by exact resultant";
        }
        if (!have_poly)
            throw Error("point_height: coordinate " + std::to_string(l + 1) + " of '" + spec.name +
                        "' has no supplied minimal polynomial, is not declared integral, and no exact "
                        "derivation applies; the height is unavailable");

        ch.degree = min_poly.degree();
        if (preferred == HeightMethod::Quadrature) {
            QuadratureResult q = mahler_measure_quadrature(min_poly, quadrature_nodes);
            ch.mahler = q.value;
            ch.method = HeightMethod::Quadrature;
            if (q.degraded) {
                std::ostringstream os;
                os << "degraded quadrature: a root lies within " << q.min_circle_distance
                   << " of the unit circle";
                ch.note = ch.note.empty() ? os.str() : ch.note + "; " + os.str();
            }
        } else {
            ch.mahler = mahler_measure_roots(min_poly);
            ch.method = HeightMethod::Roots;
        }
        ch.h = ch.mahler / ch.degree;
    }

    std::vector<double> hs;
    hs.reserve(N);
    for (const auto& ch : rep.per_coordinate) hs.push_back(ch.h);
    rep.total_h = pairwise_sum(hs);
    return rep;
}

double set_height(const std::vector<std::pair<int, double>>& orbit_degree_and_height) {
    double total = 0.0;
    for (const auto& [D, h] : orbit_degree_and_height) total += D * h;
    return total;
}

LogSumCheck check_log_sum(const GaloisOrbit& orbit, double h_total) {
    std::vector<double> terms;
    terms.reserve(orbit.cardinality * orbit.dimension);
    for (const auto& row : orbit.log_moduli)
        for (double u : row) terms.push_back(std::fabs(u));
    LogSumCheck out;
    out.lhs = pairwise_sum(terms) / orbit.cardinality;
    out.bound = 2.0 * h_total;
    out.ok = out.lhs <= out.bound + 1e-9;
    return out;
}

TailCountCheck check_tail_count(const ComplexRootSet& orbit_1d, double delta, double set_h) {
    if (!(delta > 0.0 && delta < 1.0)) throw Error("check_tail_count: delta must lie in (0,1)");
    const double cutoff = std::log(1.0 / delta);
    TailCountCheck out;
    for (const auto& r : orbit_1d.roots)
        if (std::fabs(std::log(std::abs(r))) > cutoff) ++out.count;
    out.bound = 2.0 * set_h / cutoff;
    out.ok = out.count == 0 || static_cast<double>(out.count) < out.bound;
    return out;
}

}  // namespace eqd
