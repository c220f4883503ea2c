#include "eqd/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace eqd {

namespace {

// In-place radix-2 Cooley-Tukey, forward transform sum x_j e^{-2pi i jk/M}.
void fft_line(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w = 1.0;
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::complex<double> u = a[i + k];
                std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

void fft_nd(std::vector<std::complex<double>>& data, int dimension, int M) {
    std::size_t stride = 1;
    std::vector<std::complex<double>> line(M);
    for (int axis = dimension - 1; axis >= 0; --axis) {
        const std::size_t block = stride * static_cast<std::size_t>(M);
        for (std::size_t base = 0; base < data.size(); base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (int k = 0; k < M; ++k) line[k] = data[base + off + k * stride];
                fft_line(line);
                for (int k = 0; k < M; ++k) data[base + off + k * stride] = line[k];
            }
        }
        stride *= M;
    }
}

int mode_of_index(int k, int M) { return k <= M / 2 ? k : k - M; }

// sum_{|n| > B} 1/(4 pi^2 n^2) < 1/(2 pi^2 B); sum_{n != 0} = 1/12.
double axis_tail_sum(int B) { return 1.0 / (2.0 * std::numbers::pi * std::numbers::pi * B); }
constexpr double kAxisFullSum = 1.0 / 12.0;

}  // namespace

std::complex<double> SpectrumTable::at(std::span<const int> n) const {
    if (static_cast<int>(n.size()) != dimension) throw Error("spectrum table: mode dimension mismatch");
    std::size_t idx = 0;
    for (int l = 0; l < dimension; ++l) {
        if (std::abs(n[l]) > box) return 0.0;
        idx = idx * (2 * box + 1) + static_cast<std::size_t>(n[l] + box);
    }
    return entries[idx];
}

std::vector<int> SpectrumTable::mode(std::size_t k) const {
    std::vector<int> n(dimension);
    const int side = 2 * box + 1;
    for (int l = dimension - 1; l >= 0; --l) {
        n[l] = static_cast<int>(k % side) - box;
        k /= side;
    }
    return n;
}

SpectrumTable fourier_coeffs(std::span<const std::complex<double>> samples, int dimension, int M, int B) {
    if (M < 2 || (M & (M - 1)) != 0) throw Error("fourier_coeffs: grid size must be a power of two");
    if (M < 2 * B + 2)
        throw Error("fourier_coeffs: grid too small for the requested box (need M >= 2B+2, got M = " +
                    std::to_string(M) + ", B = " + std::to_string(B) + ")");
    std::size_t total = 1;
    for (int l = 0; l < dimension; ++l) total *= static_cast<std::size_t>(M);
    if (samples.size() != total) throw Error("fourier_coeffs: sample count mismatch");

    std::vector<std::complex<double>> data(samples.begin(), samples.end());
    fft_nd(data, dimension, M);
    const double norm = static_cast<double>(total);
    for (auto& c : data) c /= norm;

    SpectrumTable table;
    table.dimension = dimension;
    table.box = B;
    table.grid = M;
    const int side = 2 * B + 1;
    std::size_t box_total = 1;
    for (int l = 0; l < dimension; ++l) box_total *= static_cast<std::size_t>(side);
    table.entries.assign(box_total, 0.0);
    {
        std::vector<int> n(dimension, -B);
        for (std::size_t k = 0; k < box_total; ++k) {
            std::size_t src = 0;
            for (int l = 0; l < dimension; ++l) {
                const int wrapped = n[l] >= 0 ? n[l] : n[l] + M;
                src = src * static_cast<std::size_t>(M) + static_cast<std::size_t>(wrapped);
            }
            table.entries[k] = data[src];
            for (int l = dimension - 1; l >= 0; --l) {
                if (++n[l] <= B) break;
                n[l] = -B;
            }
        }
    }

    // Tail of the l^1 mass outside the box, via the Cauchy-Schwarz pattern of
    // the C^{N+1} smoothness argument: partition the out-of-box modes by the
    // support of n and pair the geometric sum of prod 1/(2pi n_l)^2 with the
    // mixed-partial energy of the same region (computed spectrally from the
    // grid). Also the analogous tails for each first partial derivative.
    // Exactly zero for trig polynomials whose spectrum fits in the box.
    const int subsets = 1 << dimension;
    std::vector<double> S(subsets, 0.0);  // sum over out-of-box modes, support = alpha
    std::vector<std::vector<double>> Sd(dimension, std::vector<double>(subsets, 0.0));
    {
        std::vector<int> idx(dimension, 0);
        for (std::size_t k = 0; k < total; ++k) {
            int alpha = 0;
            bool outside = false;
            double weight = 1.0;
            for (int l = 0; l < dimension; ++l) {
                const int n = mode_of_index(idx[l], M);
                if (n != 0) {
                    alpha |= 1 << l;
                    weight *= 2.0 * std::numbers::pi * n;
                }
                outside = outside || std::abs(n) > B;
            }
            if (outside) {
                const double a2 = std::norm(data[k]) * weight * weight;
                S[alpha] += a2;
                for (int l = 0; l < dimension; ++l) {
                    const int n = mode_of_index(idx[l], M);
                    const double wl = 2.0 * std::numbers::pi * n;
                    Sd[l][alpha] += a2 * wl * wl;
                }
            }
            for (int l = dimension - 1; l >= 0; --l) {
                if (++idx[l] < M) break;
                idx[l] = 0;
            }
        }
    }
    auto geo_outside = [&](int alpha) {
        // bound on sum over {n : support(n) = alpha, ||n||_inf > B} of prod 1/(2pi n_l)^2
        double sum = 0.0;
        for (int l = 0; l < dimension; ++l) {
            if (!(alpha & (1 << l))) continue;
            double term = axis_tail_sum(B);
            for (int j = 0; j < dimension; ++j)
                if (j != l && (alpha & (1 << j))) term *= kAxisFullSum;
            sum += term;
        }
        return sum;
    };
    table.tail_l1 = 0.0;
    table.tail_l1_deriv.assign(dimension, 0.0);
    for (int alpha = 1; alpha < subsets; ++alpha) {
        const double g = geo_outside(alpha);
        table.tail_l1 += std::sqrt(g * S[alpha]);
        for (int l = 0; l < dimension; ++l)
            table.tail_l1_deriv[l] += std::sqrt(g * Sd[l][alpha]);
    }
    // Builtin trig polynomials have compact spectra; clip rounding dust.
    if (table.tail_l1 < 1e-13) table.tail_l1 = 0.0;
    for (double& t : table.tail_l1_deriv)
        if (t < 1e-12) t = 0.0;
    return table;
}

SpectrumTable fourier_coeffs(const TestFunction& f, int M, int B) {
    std::vector<std::complex<double>> samples = f.sample_torus(M);
    return fourier_coeffs(samples, f.dimension(), M, B);
}

double transform_l1(const SpectrumTable& table) {
    std::vector<double> mags(table.entries.size());
    for (std::size_t k = 0; k < table.entries.size(); ++k) mags[k] = std::abs(table.entries[k]);
    return pairwise_sum(mags);
}

SpectrumTable derivative_spectrum(const SpectrumTable& table, int axis) {
    if (axis < 0 || axis >= table.dimension) throw Error("derivative_spectrum: axis out of range");
    SpectrumTable out = table;
    for (std::size_t k = 0; k < out.entries.size(); ++k) {
        const std::vector<int> n = out.mode(k);
        out.entries[k] *= std::complex<double>(0.0, 2.0 * std::numbers::pi * n[axis]);
    }
    out.tail_l1 = table.tail_l1_deriv.empty() ? 0.0 : table.tail_l1_deriv[axis];
    out.tail_l1_deriv.clear();  // second-order tails are not tracked
    return out;
}

double haar_integral(const SpectrumTable& table) {
    std::vector<int> zero(table.dimension, 0);
    return table.at(zero).real();
}

COfF c_of_F(const TestFunction& f, const SpectrumTable& table) {
    COfF out;
    out.lip_term = 2.0 * f.lip();
    for (int l = 0; l < table.dimension; ++l) {
        SpectrumTable d = derivative_spectrum(table, l);
        out.deriv_l1 += transform_l1(d);
        out.deriv_tail += d.tail_l1;
    }
    if (!std::isfinite(out.deriv_tail) || !std::isfinite(out.deriv_l1))
        throw Error("c_of_F: unbounded derivative-spectrum tail, the function cannot be certified");
    out.value = out.lip_term + 16.0 * (out.deriv_l1 + out.deriv_tail);
    return out;
}

std::complex<double> OrbitSpectrum::at(std::span<const int> n) const {
    if (static_cast<int>(n.size()) != dimension) throw Error("orbit spectrum: mode dimension mismatch");
    std::size_t idx = 0;
    for (int l = 0; l < dimension; ++l) {
        if (std::abs(n[l]) > box) throw Error("orbit spectrum: mode outside the computed box");
        idx = idx * (2 * box + 1) + static_cast<std::size_t>(n[l] + box);
    }
    return entries[idx];
}

OrbitSpectrum fourier_stieltjes(const GaloisOrbit& orbit, int box) {
    OrbitSpectrum out;
    out.dimension = orbit.dimension;
    out.box = box;
    const int side = 2 * box + 1;
    std::size_t total = 1;
    for (int l = 0; l < orbit.dimension; ++l) total *= static_cast<std::size_t>(side);
    out.entries.assign(total, 0.0);
    std::vector<int> n(orbit.dimension, -box);
    std::vector<std::complex<double>> terms(orbit.cardinality);
    for (std::size_t k = 0; k < total; ++k) {
        for (int j = 0; j < orbit.cardinality; ++j) {
            double phase = 0.0;
            for (int l = 0; l < orbit.dimension; ++l) phase += n[l] * orbit.angles[j][l];
            terms[j] = std::polar(1.0, -2.0 * std::numbers::pi * phase);
        }
        out.entries[k] = pairwise_sum(terms) / static_cast<double>(orbit.cardinality);
        for (int l = orbit.dimension - 1; l >= 0; --l) {
            if (++n[l] <= box) break;
            n[l] = -box;
        }
    }
    return out;
}

PairingResult pair_spectra(const SpectrumTable& table, const OrbitSpectrum& orbit_spectrum) {
    if (table.dimension != orbit_spectrum.dimension)
        throw Error("pair_spectra: dimension mismatch");
    if (orbit_spectrum.box < table.box)
        throw Error("pair_spectra: orbit spectrum box smaller than the function box");
    std::vector<std::complex<double>> terms;
    terms.reserve(table.entries.size());
    for (std::size_t k = 0; k < table.entries.size(); ++k) {
        const std::vector<int> n = table.mode(k);
        if (std::all_of(n.begin(), n.end(), [](int v) { return v == 0; })) continue;
        terms.push_back(table.entries[k] * std::conj(orbit_spectrum.at(n)));
    }
    PairingResult out;
    out.value = pairwise_sum(terms);
    out.tail_bound = table.tail_l1;
    return out;
}

}  // namespace eqd
