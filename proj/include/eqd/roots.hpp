#ifndef EQD_ROOTS_HPP
#define EQD_ROOTS_HPP

#include <complex>
#include <vector>

#include "eqd/int_polynomial.hpp"

namespace eqd {

struct RootOptions {
    double target_precision = 1e-12;
    /// Reject polynomials with zero constant term (they cannot define an
    /// element of the multiplicative group).
    bool require_nonzero_constant = true;
    int max_iterations = 400;
};

/// All complex roots of an integer polynomial with per-root certified-style
/// error radii (d*|p(z)/p'(z)| plus the Horner evaluation noise floor).
struct ComplexRootSet {
    std::vector<std::complex<double>> roots;  // sorted by (re, im)
    std::vector<double> error_radius;
    IntPolynomial source;
    bool squarefree_warning = false;  // two roots closer than 10*error_radius
    double min_root_separation = 0.0;
    double max_error_radius = 0.0;
    /// min over roots of | |r| - 1 | (distance to the unit circle).
    double min_circle_distance = 0.0;
};

/// Simultaneous root refinement (Aberth-class iteration from circle seeds),
/// double precision with one extended-precision retry.
/// Throws Error on non-convergence (message carries the best residual) and on
/// a zero constant term when require_nonzero_constant is set.
ComplexRootSet find_roots(const IntPolynomial& p, const RootOptions& opts = {});

}  // namespace eqd

#endif
