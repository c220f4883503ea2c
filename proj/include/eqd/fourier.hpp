#ifndef EQD_FOURIER_HPP
#define EQD_FOURIER_HPP

#include <complex>
#include <span>
#include <vector>

#include "eqd/orbit.hpp"
#include "eqd/test_function.hpp"

namespace eqd {

/// Fourier coefficients of a torus function on the centered box ||n||_inf <= B,
/// with the out-of-box l^1 mass bounded from grid data (the smoothness decay
/// estimate; exactly zero for trig-polynomial builtins that fit in the box).
class SpectrumTable {
public:
    int dimension = 1;
    int box = 0;   // B
    int grid = 0;  // M used to compute the table
    std::vector<std::complex<double>> entries;  // odometer over [-B, B]^N
    double tail_l1 = 0.0;                 // bound on sum_{outside} |F0^(n)|
    std::vector<double> tail_l1_deriv;    // per axis: bound on sum_{outside} |(d_l F0)^(n)|

    std::complex<double> at(std::span<const int> n) const;
    std::size_t size() const { return entries.size(); }
    /// Mode vector of the k-th entry.
    std::vector<int> mode(std::size_t k) const;
};

/// Multidimensional DFT of grid samples (M a power of two, M >= 2B+2).
SpectrumTable fourier_coeffs(std::span<const std::complex<double>> samples, int dimension, int M, int B);
SpectrumTable fourier_coeffs(const TestFunction& f, int M, int B);

/// In-box l^1 norm of the table (the tail bound is reported separately).
double transform_l1(const SpectrumTable& table);

/// Entry-wise multiplication by 2 pi i n_l; the resulting table's tail is the
/// parent's derivative tail along that axis.
SpectrumTable derivative_spectrum(const SpectrumTable& table, int axis);

/// Integral of F0 against the Haar measure: the (0,...,0) coefficient.
double haar_integral(const SpectrumTable& table);

struct COfF {
    double value = 0.0;        // 2 Lip(F) + 16 sum_l ||(d_l F0)^||_1
    double lip_term = 0.0;     // 2 Lip(F)
    double deriv_l1 = 0.0;     // sum over axes of the in-box derivative l^1 norm
    double deriv_tail = 0.0;   // sum over axes of the derivative tail bounds
};

COfF c_of_F(const TestFunction& f, const SpectrumTable& table);

/// Fourier-Stieltjes transform of the orbit measure pushed to the torus:
/// nu^(n) = (1/D) sum_j e^{-2 pi i n . theta_j}.
class OrbitSpectrum {
public:
    int dimension = 1;
    int box = 0;
    std::vector<std::complex<double>> entries;
    std::complex<double> at(std::span<const int> n) const;
};

OrbitSpectrum fourier_stieltjes(const GaloisOrbit& orbit, int box);

struct PairingResult {
    std::complex<double> value;  // sum_{n != 0} F0^(n) conj(nu^(n))
    double tail_bound = 0.0;     // |nu^| <= 1 times the table tail
};

PairingResult pair_spectra(const SpectrumTable& table, const OrbitSpectrum& orbit_spectrum);

}  // namespace eqd

#endif
