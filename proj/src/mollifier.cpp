#include "eqd/mollifier.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace eqd {

namespace {

void require_delta(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must lie strictly in (0,1)");
}

}  // namespace

double mollifier_rho(double delta, double r) {
    require_delta(delta);
    if (r < delta / 2.0) return 0.0;
    if (r <= delta) return (5.0 * delta - 4.0 * r) * (delta - 2.0 * r) * (delta - 2.0 * r) /
                           (delta * delta * delta);
    if (r < 1.0 / delta) return 1.0;
    if (r <= 2.0 / delta) {
        const double a = -2.0 + delta * r;
        return a * a * (-1.0 + 2.0 * delta * r);
    }
    return 0.0;
}

double mollifier_rho_prime(double delta, double r) {
    require_delta(delta);
    if (r >= delta / 2.0 && r <= delta)
        return -24.0 / (delta * delta * delta) * (delta - 2.0 * r) * (delta - r);
    if (r >= 1.0 / delta && r <= 2.0 / delta)
        return 6.0 * delta * (-2.0 + delta * r) * (-1.0 + delta * r);
    return 0.0;
}

SpherePoint SpherePoint::from_affine(std::complex<double> z) {
    if (std::abs(z) <= 1.0) return {std::complex<double>(1.0, 0.0), z};
    return {1.0 / z, std::complex<double>(1.0, 0.0)};
}

SpherePoint SpherePoint::infinity() { return {std::complex<double>(0.0, 0.0), std::complex<double>(1.0, 0.0)}; }

std::complex<double> f_delta(double delta, const SpherePoint& p) {
    require_delta(delta);
    if (std::abs(p.z0) == 0.0) return 0.0;
    const std::complex<double> z = p.z1 / p.z0;
    const double r = std::abs(z);
    if (r == 0.0) return 0.0;
    const double rho = mollifier_rho(delta, r);
    if (rho == 0.0) return 0.0;
    return rho * z / r;
}

SphereDistance sphere_distance(const SpherePoint& p, const SpherePoint& q) {
    const double np = std::sqrt(std::norm(p.z0) + std::norm(p.z1));
    const double nq = std::sqrt(std::norm(q.z0) + std::norm(q.z1));
    // |<p,q>| and |p ^ q| are cos and sin of half the arc scaled by np*nq
    // (Lagrange identity on C^2); atan2 keeps the arc accurate at both ends,
    // where the plain arccos form loses the small-separation digits.
    const double cos_half = std::abs(p.z0 * std::conj(q.z0) + p.z1 * std::conj(q.z1));
    const double sin_half = std::abs(p.z0 * q.z1 - p.z1 * q.z0);
    SphereDistance out;
    out.sph = 2.0 * std::atan2(sin_half, cos_half);
    out.ch = 2.0 * sin_half / (np * nq);
    return out;
}

double fdelta_lipschitz_bound(double delta) {
    require_delta(delta);
    return 2.0 * std::numbers::sqrt2 * (delta * delta + 9.0) / (delta * delta * delta);
}

SphereFunction fdelta_real(double delta) {
    return {"u_delta", fdelta_lipschitz_bound(delta),
            [delta](const SpherePoint& p) { return f_delta(delta, p).real(); }};
}

SphereFunction fdelta_imag(double delta) {
    return {"v_delta", fdelta_lipschitz_bound(delta),
            [delta](const SpherePoint& p) { return f_delta(delta, p).imag(); }};
}

SphereFunction lifted_trig(const std::vector<TrigTerm>& terms, double delta) {
    require_delta(delta);
    double sup_T = 0.0, sup_dT = 0.0;
    for (const TrigTerm& t : terms) {
        if (t.n.size() != 1) throw Error("lifted_trig: terms must be one-dimensional");
        const double amp = std::hypot(t.cos_coeff, t.sin_coeff);
        sup_T += amp;
        sup_dT += 2.0 * std::numbers::pi * std::abs(t.n[0]) * amp;
    }
    // Gradient bound on the support annulus (radial and angular parts are
    // orthogonal): |T| |rho'| <= 3 sup|T| / delta and |T'|/(2 pi m) * rho with
    // m >= delta/2, then the same chordal case analysis as for f_delta.
    const double grad = std::hypot(3.0 * sup_T / delta, sup_dT / (std::numbers::pi * delta));
    const double inner_cases = grad * (delta * delta + 9.0) / (2.0 * delta * delta);
    const double jump_case =
        sup_T * std::sqrt((delta * delta + 4.0) * (delta * delta + 9.0)) / (2.0 * delta);
    SphereFunction f;
    f.name = "lifted_trig";
    f.lip_sph = std::max(inner_cases, jump_case);
    f.eval = [terms, delta](const SpherePoint& p) {
        if (std::abs(p.z0) == 0.0) return 0.0;
        const std::complex<double> z = p.z1 / p.z0;
        const double r = std::abs(z);
        if (r == 0.0) return 0.0;
        const double rho = mollifier_rho(delta, r);
        if (rho == 0.0) return 0.0;
        double theta = std::arg(z) / (2.0 * std::numbers::pi);
        theta -= std::floor(theta);
        double v = 0.0;
        for (const TrigTerm& t : terms) {
            const double phase = 2.0 * std::numbers::pi * t.n[0] * theta;
            v += t.cos_coeff * std::cos(phase) + t.sin_coeff * std::sin(phase);
        }
        return v * rho;
    };
    return f;
}

double estimate_lipschitz(const SphereFunction& f, double delta, int samples, std::uint64_t seed) {
    require_delta(delta);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double lo = std::log(delta / 4.0), hi = std::log(4.0 / delta);
    auto draw = [&]() {
        const double r = std::exp(lo + (hi - lo) * unit(rng));
        const double phi = 2.0 * std::numbers::pi * unit(rng);
        return SpherePoint::from_affine(std::polar(r, phi));
    };
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        SpherePoint p = (i % 97 == 0) ? SpherePoint::infinity() : draw();
        SpherePoint q;
        if (i % 2 == 0) {
            // half of the pairs probe the gradient at separation below 1e-3
            const double scale = std::pow(10.0, -8.0 + 4.7 * unit(rng));
            const double phi = 2.0 * std::numbers::pi * unit(rng);
            if (std::abs(p.z0) == 0.0) {
                q = SpherePoint::from_affine(std::polar(1.0 / scale, phi));
            } else {
                const std::complex<double> zp = p.z1 / p.z0;
                q = SpherePoint::from_affine(zp + std::polar(scale * (1.0 + std::abs(zp)), phi));
            }
        } else {
            q = draw();
        }
        const double d = sphere_distance(p, q).sph;
        if (d < 1e-14) continue;
        worst = std::max(worst, std::fabs(f.eval(p) - f.eval(q)) / d);
    }
    return worst;
}

double delta_objective(double delta) {
    require_delta(delta);
    return -2.0 / std::log(delta) +
           4.0 * std::numbers::sqrt2 * (delta * delta + 9.0) / (delta * delta * delta);
}

DeltaOptimum optimize_delta() {
    // grid pre-scan, then golden-section on the bracketing interval
    const int grid = 1000;
    double best = 1e300;
    int best_i = 1;
    for (int i = 1; i < grid; ++i) {
        const double d = static_cast<double>(i) / grid;
        const double v = delta_objective(d);
        if (v < best) {
            best = v;
            best_i = i;
        }
    }
    double a = std::max(1e-9, (best_i - 1.0) / grid);
    double b = std::min(1.0 - 1e-9, (best_i + 1.0) / grid);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = delta_objective(x1);
    double f2 = delta_objective(x2);
    while (b - a > 1e-6) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = delta_objective(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = delta_objective(x2);
        }
    }
    DeltaOptimum out;
    out.delta = 0.5 * (a + b);
    out.value = delta_objective(out.delta);
    return out;
}

double optimal_delta() {
    static const double cached = optimize_delta().delta;
    return cached;
}

}  // namespace eqd
