#ifndef EQD_MOLLIFIER_HPP
#define EQD_MOLLIFIER_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "eqd/test_function.hpp"

namespace eqd {

/// Radial cutoff rho_delta: 0 below delta/2, a cubic ramp up to 1 at delta,
/// flat 1 on (delta, 1/delta), a cubic ramp down to 0 at 2/delta.
double mollifier_rho(double delta, double r);
double mollifier_rho_prime(double delta, double r);

/// Point of the projective complex line, normalized so max(|z0|, |z1|) = 1.
struct SpherePoint {
    std::complex<double> z0{1.0, 0.0};
    std::complex<double> z1{0.0, 0.0};

    static SpherePoint from_affine(std::complex<double> z);
    static SpherePoint infinity();
};

/// f_delta(1:z) = rho_delta(|z|) z/|z|, f_delta(0:1) = 0.
std::complex<double> f_delta(double delta, const SpherePoint& p);

struct SphereDistance {
    double sph = 0.0;  // great-circle distance, <= pi
    double ch = 0.0;   // chord length, <= 2
};

SphereDistance sphere_distance(const SpherePoint& p, const SpherePoint& q);

/// Proven bound Lip_sph(u_delta), Lip_sph(v_delta) <= 2 sqrt(2) (delta^2+9)/delta^3.
double fdelta_lipschitz_bound(double delta);

/// Real-valued test function on the sphere with a certified Lipschitz constant.
struct SphereFunction {
    std::string name;
    double lip_sph = 0.0;
    std::function<double(const SpherePoint&)> eval;
};

SphereFunction fdelta_real(double delta);  // u_delta
SphereFunction fdelta_imag(double delta);  // v_delta
/// T(arg z / 2pi) * rho_delta(|z|) on the affine chart (terms must be 1-D);
/// the Lipschitz constant comes from the same chordal case analysis as f_delta.
SphereFunction lifted_trig(const std::vector<TrigTerm>& terms, double delta);

/// Empirical sup of |f(p)-f(q)| / d_sph(p,q) over random pairs, half of them
/// at separation below 1e-3. Can falsify a Lipschitz constant, never certify it.
double estimate_lipschitz(const SphereFunction& f, double delta, int samples, std::uint64_t seed);

/// The objective -2/log(delta) + 4 sqrt(2) (delta^2+9)/delta^3 minimized over
/// (0,1) in the proof of the main bound.
double delta_objective(double delta);

struct DeltaOptimum {
    double delta = 0.0;
    double value = 0.0;
};

/// Grid pre-scan plus golden-section refinement to 1e-6.
DeltaOptimum optimize_delta();

/// Cached optimizer delta* (~0.9071).
double optimal_delta();

}  // namespace eqd

#endif
