#ifndef EQD_INT_POLYNOMIAL_HPP
#define EQD_INT_POLYNOMIAL_HPP

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "eqd/common.hpp"

namespace eqd {

/// Exact univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending order a0..ad with ad != 0 (the zero polynomial is empty).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> ascending_coeffs);
    IntPolynomial(std::initializer_list<long> ascending_coeffs);

    /// Coefficients given as decimal strings, arbitrary precision.
    static IntPolynomial from_strings(const std::vector<std::string>& ascending);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& leading() const;
    const mpz_class& constant_term() const;
    /// Coefficient of x^k (zero outside the stored range).
    const mpz_class& coeff(std::size_t k) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    IntPolynomial derivative() const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

    /// Exact division in Z[x]; throws if the remainder is nonzero.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    mpz_class content() const;
    /// Content removed, leading coefficient made positive.
    IntPolynomial primitive_part() const;

    std::complex<double> eval(std::complex<double> z) const;
    double eval(double x) const;
    /// Coefficients converted to double (saturating for huge values).
    std::vector<double> coeffs_as_double() const;
    /// Max |a_k| as a double.
    double max_abs_coeff() const;

    std::string to_string() const;

private:
    std::vector<mpz_class> coeffs_;
    void trim();
};

/// m-th cyclotomic polynomial, computed by exact division of x^m - 1.
IntPolynomial cyclotomic(int m);

/// GCD in Z[x] via the primitive polynomial remainder sequence.
/// Result is primitive with positive leading coefficient.
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

/// p / gcd(p, p'), primitive, positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Resultant of two integer polynomials (Sylvester determinant, Bareiss).
mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b);

/// g(x)/den with integer numerator coefficients; normalized so that
/// gcd(content(num), den) = 1 and den >= 1.
struct RatPolynomial {
    IntPolynomial num;
    mpz_class den = 1;

    RatPolynomial() = default;
    RatPolynomial(IntPolynomial numerator, mpz_class denominator);
    void normalize();
    bool is_zero() const { return num.is_zero(); }
    std::complex<double> eval(std::complex<double> z) const;
    RatPolynomial derivative() const;
};

/// Minimal polynomial of g(gamma)/den over Q, where gamma is a root of M
/// (assumed irreducible). Computed as the squarefree part of the resultant
/// Res_y(M(y), den*x - g(y)); exact for deg(M) <= 12, rejected above that.
IntPolynomial coordinate_min_poly(const IntPolynomial& M, const RatPolynomial& g);

}  // namespace eqd

#endif
