#ifndef EQD_TEST_FUNCTION_HPP
#define EQD_TEST_FUNCTION_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "eqd/common.hpp"

namespace eqd {

/// One term a*cos(2pi n.theta) + b*sin(2pi n.theta) of a real trig polynomial.
struct TrigTerm {
    std::vector<int> n;
    double cos_coeff = 0.0;
    double sin_coeff = 0.0;
};

/// Smooth compactly supported radial profile: psi(t) = exp(1 - 1/(1-t^2)) for
/// |t| < 1, zero outside, psi(0) = 1, psi'(0) = 0.
double bump_profile(double t);
/// Frozen upper bound on sup |psi'| (attained at t^2 = 1/sqrt(3)).
inline constexpr double kBumpLip = 2.1705;

/// A member of the test-function class: a Lipschitz function on the ambient
/// space in logarithmic-polar coordinates whose torus restriction F0 is smooth.
/// Builtins are F(theta, u) = T(theta) * psi(|u|/w) with T a trig polynomial;
/// their Lipschitz constants come from closed-form ingredient bounds.
class TestFunction {
public:
    enum class Kind { Constant, TrigBump, Sampled };

    static TestFunction constant(int dimension, double value);
    static TestFunction trig_bump(int dimension, std::vector<TrigTerm> terms, double bump_width);
    /// F0 given by samples on a power-of-two grid; extended off the torus by
    /// the standard bump profile. The Lipschitz constant is declared by the
    /// caller and the smoothness class cannot be certified (flagged).
    static TestFunction sampled(int dimension, int grid, std::vector<double> samples,
                                double declared_lip, double bump_width = 1.0);

    double value(std::span<const double> theta, std::span<const double> u) const;
    double torus_value(std::span<const double> theta) const;  // F0

    int dimension() const { return dimension_; }
    double lip() const { return lip_; }
    Kind kind() const { return kind_; }
    bool unverified_smoothness() const { return kind_ == Kind::Sampled; }
    const std::vector<TrigTerm>& terms() const { return terms_; }
    double bump_width() const { return bump_width_; }

    /// F0 sampled on the M^N equispaced grid, row-major.
    std::vector<std::complex<double>> sample_torus(int M) const;

    std::string name;

private:
    TestFunction() = default;
    Kind kind_ = Kind::Constant;
    int dimension_ = 1;
    double lip_ = 0.0;
    double constant_ = 0.0;
    std::vector<TrigTerm> terms_;
    double bump_width_ = 1.0;
    // sampled kind: full-grid spectrum for trigonometric interpolation
    int sampled_grid_ = 0;
    std::vector<std::complex<double>> sampled_spectrum_;
};

/// Empirical max of |F(x)-F(y)| / d(x,y) over random pairs; a validation
/// probe for the stored Lipschitz constant, not a proof.
double validate_lipschitz(const TestFunction& f, int pairs, std::uint64_t seed);

}  // namespace eqd

#endif
