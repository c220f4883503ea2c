#include "eqd/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

namespace eqd {

int AlgebraicPointSpec::dimension() const {
    return mode == PointMode::Primitive ? static_cast<int>(coords.size())
                                        : static_cast<int>(coord_min_polys.size());
}

void AlgebraicPointSpec::validate() const {
    if (dimension() < 1) throw Error("point spec '" + name + "': dimension must be >= 1");
    if (mode == PointMode::Primitive) {
        if (primitive_min_poly.degree() < 1)
            throw Error("point spec '" + name + "': primitive minimal polynomial must have degree >= 1");
        if (primitive_min_poly.constant_term() == 0)
            throw Error("point spec '" + name + "': primitive minimal polynomial has a zero root");
        for (std::size_t l = 0; l < coords.size(); ++l)
            if (coords[l].is_zero())
                throw Error("point spec '" + name + "': coordinate " + std::to_string(l + 1) +
                            " is the zero expression");
    } else {
        if (!product_degree_asserted)
            throw Error("point spec '" + name +
                        "': product mode requires the compositum-degree assertion flag");
        for (const IntPolynomial& p : coord_min_polys) {
            if (p.degree() < 1) throw Error("point spec '" + name + "': coordinate polynomial of degree 0");
            if (p.constant_term() == 0)
                throw Error("point spec '" + name + "': coordinate polynomial has a zero root");
        }
    }
    if (!coord_min_polys.empty() && static_cast<int>(coord_min_polys.size()) != dimension())
        throw Error("point spec '" + name + "': coord_min_polys length mismatch");
    if (!coord_is_integer.empty() && static_cast<int>(coord_is_integer.size()) != dimension())
        throw Error("point spec '" + name + "': integral-coordinate flags length mismatch");
}

std::vector<std::string> AlgebraicPointSpec::provenance() const {
    std::vector<std::string> notes;
    if (mode == PointMode::Primitive) {
        notes.push_back("point presented via a primitive element; orbit degree taken from its "
                        "minimal polynomial (a representation choice, not part of the input data)");
    } else {
        notes.push_back("product mode: compositum degree asserted equal to the product of the "
                        "coordinate degrees (declared by the input, not verified)");
    }
    return notes;
}

namespace {

double to_unit_angle(std::complex<double> z) {
    double t = std::arg(z) / (2 * std::numbers::pi);
    t -= std::floor(t);
    if (t >= 1.0) t = 0.0;
    return t;
}

void fill_polar(GaloisOrbit& orbit) {
    orbit.angles.assign(orbit.points.size(), {});
    orbit.log_moduli.assign(orbit.points.size(), {});
    for (std::size_t j = 0; j < orbit.points.size(); ++j) {
        orbit.angles[j].resize(orbit.dimension);
        orbit.log_moduli[j].resize(orbit.dimension);
        for (int l = 0; l < orbit.dimension; ++l) {
            orbit.angles[j][l] = to_unit_angle(orbit.points[j][l]);
            orbit.log_moduli[j][l] = std::log(std::abs(orbit.points[j][l]));
        }
    }
}

void certify_nonzero(const GaloisOrbit& orbit, const std::string& name) {
    for (const auto& pt : orbit.points)
        for (const auto& v : pt)
            if (std::abs(v) < 10.0 * orbit.error_radius)
                throw Error("orbit of '" + name + "': coordinate value with modulus " +
                            std::to_string(std::abs(v)) +
                            " below 10x the error radius, cannot certify membership in Qbar^x");
}

}  // namespace

GaloisOrbit enumerate_orbit(const AlgebraicPointSpec& spec, double precision) {
    spec.validate();
    const int N = spec.dimension();
    GaloisOrbit orbit;
    orbit.dimension = N;
    orbit.provenance = spec.provenance();

    RootOptions ropts;
    ropts.target_precision = precision;

    if (spec.mode == PointMode::Primitive) {
        ComplexRootSet gamma = find_roots(spec.primitive_min_poly, ropts);
        const int D = spec.primitive_min_poly.degree();
        orbit.cardinality = D;
        orbit.points.assign(D, std::vector<std::complex<double>>(N));
        double err = 0.0;
        for (int j = 0; j < D; ++j) {
            for (int l = 0; l < N; ++l) {
                const RatPolynomial& g = spec.coords[l];
                std::complex<double> v = g.eval(gamma.roots[j]);
                orbit.points[j][l] = v;
                // first-order propagation |g'(gamma)|*r plus Horner rounding noise
                double prop = std::abs(g.derivative().eval(gamma.roots[j])) * gamma.error_radius[j];
                double noise = 0.0, az = std::abs(gamma.roots[j]), pw = 1.0;
                for (const mpz_class& c : g.num.coeffs()) {
                    noise += std::fabs(c.get_d()) * pw;
                    pw *= az;
                }
                noise *= 4.0 * std::numeric_limits<double>::epsilon() / g.den.get_d();
                err = std::max(err, prop + noise);
            }
        }
        orbit.error_radius = std::max(err, 1e-300);
    } else {
        std::vector<ComplexRootSet> sets;
        long long D = 1;
        for (const IntPolynomial& p : spec.coord_min_polys) {
            sets.push_back(find_roots(p, ropts));
            D *= p.degree();
        }
        if (D > 2'000'000)
            throw Error("product-mode orbit too large (" + std::to_string(D) + " points)");
        orbit.cardinality = static_cast<int>(D);
        orbit.points.assign(orbit.cardinality, std::vector<std::complex<double>>(N));
        double err = 0.0;
        for (const auto& s : sets) err = std::max(err, s.max_error_radius);
        orbit.error_radius = std::max(err, 1e-300);
        std::vector<int> idx(N, 0);
        for (int j = 0; j < orbit.cardinality; ++j) {
            for (int l = 0; l < N; ++l) orbit.points[j][l] = sets[l].roots[idx[l]];
            for (int l = N - 1; l >= 0; --l) {
                if (++idx[l] < static_cast<int>(sets[l].roots.size())) break;
                idx[l] = 0;
            }
        }
    }

    fill_polar(orbit);
    certify_nonzero(orbit, spec.name);
    return orbit;
}

namespace {

double logpolar_distance(const std::pair<double, double>& a, const std::pair<double, double>& b) {
    return std::hypot(a.first - b.first, wrap_distance(a.second, b.second));
}

}  // namespace

MonomialImage monomial_image(const GaloisOrbit& orbit, std::span<const int> n) {
    if (static_cast<int>(n.size()) != orbit.dimension)
        throw Error("monomial_image: exponent dimension mismatch");
    bool all_zero = true;
    for (int v : n) all_zero = all_zero && v == 0;
    if (all_zero) throw Error("monomial_image: the exponent vector must be nonzero");

    const int D = orbit.cardinality;
    MonomialImage img;
    img.exponent.assign(n.begin(), n.end());
    img.values.resize(D);
    double prop_err = 0.0;
    for (int j = 0; j < D; ++j) {
        double u = 0.0, theta = 0.0, e = 0.0;
        for (int l = 0; l < orbit.dimension; ++l) {
            u += n[l] * orbit.log_moduli[j][l];
            theta += n[l] * orbit.angles[j][l];
            e += std::abs(n[l]) * orbit.error_radius / std::abs(orbit.points[j][l]);
        }
        theta -= std::floor(theta);
        if (theta >= 1.0) theta = 0.0;
        img.values[j] = {u, theta};
        prop_err = std::max(prop_err, e);
    }

    // Distinct-value clustering: identify values within tau (single linkage),
    // demand clusters pairwise separated by >= 10*tau, and fail loudly instead
    // of guessing when the separation or the count l_n * deg_n = D breaks.
    const double tau = std::max(1e-7, 100.0 * prop_err);
    img.cluster_threshold = tau;
    std::vector<int> parent(D);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < D; ++i)
        for (int j = i + 1; j < D; ++j)
            if (logpolar_distance(img.values[i], img.values[j]) <= tau) {
                int a = find(i), b = find(j);
                if (a != b) parent[a] = b;
            }
    std::vector<int> label(D, -1);
    int k = 0;
    img.cluster_of.resize(D);
    for (int i = 0; i < D; ++i) {
        int r = find(i);
        if (label[r] < 0) label[r] = k++;
        img.cluster_of[i] = label[r];
    }
    img.distinct_count = k;

    img.cluster_separation = std::numeric_limits<double>::infinity();
    for (int i = 0; i < D; ++i)
        for (int j = i + 1; j < D; ++j)
            if (img.cluster_of[i] != img.cluster_of[j])
                img.cluster_separation =
                    std::min(img.cluster_separation, logpolar_distance(img.values[i], img.values[j]));
    if (k > 1 && img.cluster_separation < 10.0 * tau) {
        std::ostringstream os;
        os << "monomial_image: cluster ambiguity for n = (";
        for (std::size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
        os << "): separation " << img.cluster_separation << " below 10*tau = " << 10.0 * tau;
        throw Error(os.str());
    }

    std::vector<int> sizes(k, 0);
    for (int c : img.cluster_of) ++sizes[c];
    const int expected = D / k;
    if (D % k != 0 || !std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s == expected; })) {
        std::ostringstream os;
        os << "monomial_image: distinct count " << k << " does not divide the orbit evenly (D = " << D
           << ") for n = (";
        for (std::size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
        os << ")";
        throw Error(os.str());
    }
    img.multiplicity = expected;

    img.representatives.assign(k, {std::numeric_limits<double>::infinity(), 0.0});
    std::vector<bool> seen(k, false);
    for (int i = 0; i < D; ++i) {
        int c = img.cluster_of[i];
        if (!seen[c] || img.values[i] < img.representatives[c]) {
            img.representatives[c] = img.values[i];
            seen[c] = true;
        }
    }
    return img;
}

int monomial_degree(const GaloisOrbit& orbit, std::span<const int> n) {
    return monomial_image(orbit, n).distinct_count;
}

}  // namespace eqd
