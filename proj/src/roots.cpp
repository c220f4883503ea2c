#include "eqd/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace eqd {

namespace {

template <class Real>
struct HornerEval {
    std::complex<Real> value;
    std::complex<Real> derivative;
    Real abs_sum;  // sum |c_k| |z|^k, running-error scale for the evaluation
};

template <class Real>
HornerEval<Real> horner(const std::vector<Real>& c, std::complex<Real> z) {
    std::complex<Real> p = 0, dp = 0;
    Real s = 0;
    const Real az = std::abs(z);
    for (std::size_t i = c.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
        s = s * az + std::abs(c[i]);
    }
    return {p, dp, s};
}

// Seed radii from the Newton polygon: the upper convex hull of (k, log|c_k|)
// splits the index range into edges, and each edge of width w contributes w
// seeds at the tropical-root radius |c_a / c_b|^{1/(b-a)}. This tracks the
// root moduli even when they spread over many orders of magnitude.
template <class Real>
std::vector<Real> polygon_radii(const std::vector<Real>& c) {
    const int d = static_cast<int>(c.size()) - 1;
    std::vector<Real> logs(d + 1);
    std::vector<bool> present(d + 1, false);
    for (int k = 0; k <= d; ++k) {
        if (c[k] != 0) {
            logs[k] = std::log(std::abs(c[k]));
            present[k] = true;
        }
    }
    std::vector<int> hull;  // c[0] and c[d] are nonzero, so the hull spans 0..d
    for (int k = 0; k <= d; ++k) {
        if (!present[k]) continue;
        while (hull.size() >= 2) {
            const int a = hull[hull.size() - 2], b = hull.back();
            if ((logs[b] - logs[a]) * (k - a) <= (logs[k] - logs[a]) * (b - a))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(k);
    }
    std::vector<Real> radii;
    radii.reserve(d);
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        const int a = hull[e], b = hull[e + 1];
        const Real r = std::exp((logs[a] - logs[b]) / (b - a));
        for (int k = a; k < b; ++k) radii.push_back(r);
    }
    return radii;
}

template <class Real>
std::vector<std::complex<Real>> initial_seeds(const std::vector<Real>& c, int attempt) {
    const int d = static_cast<int>(c.size()) - 1;
    std::vector<Real> radii = polygon_radii(c);
    std::vector<std::complex<Real>> z(d);
    const Real offset = Real(0.3999) + Real(0.17) * attempt;
    for (int k = 0; k < d; ++k) {
        Real r = radii[k];
        if (attempt >= 1) r *= std::exp(Real(0.3) * attempt * ((k % 3) - 1));
        const Real phi = 2 * std::numbers::pi_v<Real> * (k + offset) / d + Real(0.5) * attempt;
        z[k] = std::polar(r, phi);
    }
    return z;
}

template <class Real>
struct SolveResult {
    std::vector<std::complex<Real>> roots;
    std::vector<Real> err;
    Real worst_residual = 0;
    bool converged = false;
};

template <class Real>
SolveResult<Real> aberth_solve(const std::vector<Real>& c, int max_iter, int attempt) {
    const int d = static_cast<int>(c.size()) - 1;
    const Real eps = std::numeric_limits<Real>::epsilon();
    SolveResult<Real> out;
    out.roots = initial_seeds(c, attempt);
    std::vector<bool> done(d, false);
    for (int iter = 0; iter < max_iter; ++iter) {
        Real max_step = 0;
        for (int i = 0; i < d; ++i) {
            if (done[i]) continue;
            auto ev = horner(c, out.roots[i]);
            const Real noise = 4 * eps * ev.abs_sum;
            if (std::abs(ev.value) <= noise) {
                done[i] = true;
                continue;
            }
            std::complex<Real> w;
            if (std::abs(ev.derivative) > 0) {
                w = ev.value / ev.derivative;
            } else {
                w = std::complex<Real>(Real(0.5) * (1 + std::abs(out.roots[i])), 0);
            }
            std::complex<Real> s = 0;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                std::complex<Real> diff = out.roots[i] - out.roots[j];
                if (std::abs(diff) < eps * (std::abs(out.roots[i]) + 1))
                    diff = std::complex<Real>(eps * (std::abs(out.roots[i]) + 1), 0);
                s += Real(1) / diff;
            }
            std::complex<Real> corr = w / (Real(1) - w * s);
            out.roots[i] -= corr;
            const Real rel = std::abs(corr) / (1 + std::abs(out.roots[i]));
            max_step = std::max(max_step, rel);
            if (rel <= 8 * eps) done[i] = true;
        }
        if (max_step <= 8 * eps) break;
    }
    // Newton polish, then the error radius d*|p/p'| with the noise floor folded in.
    out.err.assign(d, Real(0));
    out.converged = true;
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < 3; ++k) {
            auto ev = horner(c, out.roots[i]);
            if (std::abs(ev.derivative) == 0 || std::abs(ev.value) <= 2 * eps * ev.abs_sum) break;
            out.roots[i] -= ev.value / ev.derivative;
        }
        auto ev = horner(c, out.roots[i]);
        const Real noise = 4 * eps * ev.abs_sum;
        const Real dp = std::abs(ev.derivative);
        Real radius;
        if (dp > 0) {
            radius = d * (std::abs(ev.value) + noise) / dp;
        } else {
            radius = std::numeric_limits<Real>::infinity();
            out.converged = false;
        }
        out.err[i] = radius;
        out.worst_residual = std::max(out.worst_residual, std::abs(ev.value));
    }
    return out;
}

// Enforce exact conjugate symmetry on the root list of a real polynomial:
// snap near-real roots and average matched conjugate pairs.
void symmetrize(std::vector<std::complex<double>>& roots, const std::vector<double>& err) {
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (std::abs(roots[i].imag()) <= std::max(err[i], 4e-16 * (1 + std::abs(roots[i]))))
            roots[i] = std::complex<double>(roots[i].real(), 0.0);
    std::vector<std::size_t> up, down;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].imag() > 0) up.push_back(i);
        else if (roots[i].imag() < 0) down.push_back(i);
    }
    if (up.size() != down.size()) return;
    auto key = [&](std::size_t i) { return std::make_pair(roots[i].real(), std::abs(roots[i].imag())); };
    std::sort(up.begin(), up.end(), [&](auto a, auto b) { return key(a) < key(b); });
    std::sort(down.begin(), down.end(), [&](auto a, auto b) { return key(a) < key(b); });
    for (std::size_t k = 0; k < up.size(); ++k) {
        std::complex<double> mean = 0.5 * (roots[up[k]] + std::conj(roots[down[k]]));
        roots[up[k]] = mean;
        roots[down[k]] = std::conj(mean);
    }
}

}  // namespace

ComplexRootSet find_roots(const IntPolynomial& p, const RootOptions& opts) {
    if (p.degree() < 1) throw Error("find_roots: polynomial must have degree >= 1");
    if (opts.require_nonzero_constant && p.constant_term() == 0)
        throw Error("find_roots: zero constant term, polynomial does not define an element of the "
                    "multiplicative group");

    ComplexRootSet out;
    out.source = p;
    const int d = p.degree();

    // Strip zero roots when they are allowed.
    int zero_roots = 0;
    std::vector<mpz_class> cs = p.coeffs();
    while (cs.front() == 0) {
        cs.erase(cs.begin());
        ++zero_roots;
    }

    if (cs.size() == 1) {
        // pure monomial a_d x^d
        out.roots.assign(zero_roots, {0.0, 0.0});
        out.error_radius.assign(zero_roots, 0.0);
    } else {
        std::vector<double> cd(cs.size());
        double scale = 0;
        for (const mpz_class& c : cs) scale = std::max(scale, std::fabs(c.get_d()));
        for (std::size_t i = 0; i < cs.size(); ++i) cd[i] = cs[i].get_d() / scale;

        auto sol = aberth_solve<double>(cd, opts.max_iterations, 0);
        bool ok = sol.converged;
        for (double e : sol.err) ok = ok && e <= opts.target_precision;
        if (!ok) {
            // one extended-precision retry
            std::vector<long double> cl(cs.size());
            for (std::size_t i = 0; i < cs.size(); ++i)
                cl[i] = static_cast<long double>(cs[i].get_d()) / static_cast<long double>(scale);
            for (int attempt = 0; attempt < 2 && !ok; ++attempt) {
                auto sl = aberth_solve<long double>(cl, 2 * opts.max_iterations, attempt);
                ok = sl.converged;
                for (long double e : sl.err) ok = ok && static_cast<double>(e) <= opts.target_precision;
                sol.roots.clear();
                sol.err.clear();
                for (std::size_t i = 0; i < sl.roots.size(); ++i) {
                    sol.roots.emplace_back(static_cast<double>(sl.roots[i].real()),
                                           static_cast<double>(sl.roots[i].imag()));
                    sol.err.push_back(static_cast<double>(sl.err[i]));
                }
                sol.worst_residual = static_cast<double>(sl.worst_residual);
            }
            if (!ok) {
                std::ostringstream os;
                os << "find_roots: non-convergence after the iteration budget for " << p.to_string()
                   << " (best scaled residual " << sol.worst_residual << ")";
                throw Error(os.str());
            }
        }
        symmetrize(sol.roots, sol.err);
        for (int i = 0; i < zero_roots; ++i) {
            sol.roots.emplace_back(0.0, 0.0);
            sol.err.push_back(0.0);
        }
        std::vector<std::size_t> order(sol.roots.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (sol.roots[a].real() != sol.roots[b].real()) return sol.roots[a].real() < sol.roots[b].real();
            return sol.roots[a].imag() < sol.roots[b].imag();
        });
        for (std::size_t i : order) {
            out.roots.push_back(sol.roots[i]);
            out.error_radius.push_back(sol.err[i]);
        }
    }

    if (static_cast<int>(out.roots.size()) != d)
        throw Error("find_roots: internal root count mismatch");

    out.max_error_radius = 0.0;
    for (double e : out.error_radius) out.max_error_radius = std::max(out.max_error_radius, e);
    out.min_root_separation = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < out.roots.size(); ++i)
        for (std::size_t j = i + 1; j < out.roots.size(); ++j)
            out.min_root_separation =
                std::min(out.min_root_separation, std::abs(out.roots[i] - out.roots[j]));
    out.squarefree_warning =
        out.roots.size() > 1 && out.min_root_separation < 10.0 * out.max_error_radius;
    out.min_circle_distance = std::numeric_limits<double>::infinity();
    for (const auto& r : out.roots)
        out.min_circle_distance = std::min(out.min_circle_distance, std::fabs(std::abs(r) - 1.0));

    if (p.constant_term() != 0) {
        for (std::size_t i = 0; i < out.roots.size(); ++i)
            if (std::abs(out.roots[i]) <= out.error_radius[i])
                throw Error("find_roots: a root cannot be certified nonzero");
    }
    return out;
}

}  // namespace eqd
