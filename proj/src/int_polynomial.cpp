#include "eqd/int_polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace eqd {

namespace {

const mpz_class kZero = 0;

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending_coeffs) {
    coeffs_.reserve(ascending_coeffs.size());
    for (long c : ascending_coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::from_strings(const std::vector<std::string>& ascending) {
    std::vector<mpz_class> cs;
    cs.reserve(ascending.size());
    for (const std::string& s : ascending) {
        mpz_class v;
        if (v.set_str(s, 10) != 0) throw Error("invalid integer coefficient: '" + s + "'");
        cs.push_back(std::move(v));
    }
    return IntPolynomial(std::move(cs));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::leading() const {
    if (is_zero()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const mpz_class& IntPolynomial::constant_term() const {
    return coeff(0);
}

const mpz_class& IntPolynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return IntPolynomial();
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = mpz_class(static_cast<long>(k)) * coeffs_[k];
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPolynomial();
    std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw Error("division by the zero polynomial");
    std::vector<mpz_class> rem = coeffs_;
    const int dd = divisor.degree();
    const int dn = degree();
    if (dn < dd) {
        if (is_zero()) return IntPolynomial();
        throw Error("inexact polynomial division (degree too small)");
    }
    std::vector<mpz_class> quot(dn - dd + 1, mpz_class(0));
    for (int k = dn - dd; k >= 0; --k) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[k + dd].get_mpz_t(), divisor.leading().get_mpz_t());
        if (r != 0) throw Error("inexact polynomial division (coefficient not divisible)");
        quot[k] = q;
        for (int j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeff(j);
    }
    for (const mpz_class& c : rem)
        if (c != 0) throw Error("inexact polynomial division (nonzero remainder)");
    return IntPolynomial(std::move(quot));
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const mpz_class& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return IntPolynomial();
    mpz_class c = content();
    if (leading() < 0) c = -c;
    std::vector<mpz_class> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] / c;
    return IntPolynomial(std::move(out));
}

std::complex<double> IntPolynomial::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i].get_d();
    return acc;
}

double IntPolynomial::eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i].get_d();
    return acc;
}

std::vector<double> IntPolynomial::coeffs_as_double() const {
    std::vector<double> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i].get_d();
    return out;
}

double IntPolynomial::max_abs_coeff() const {
    double m = 0.0;
    for (const mpz_class& c : coeffs_) m = std::max(m, std::fabs(c.get_d()));
    return m;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << coeffs_[i].get_str();
    }
    os << "]";
    return os.str();
}

IntPolynomial cyclotomic(int m) {
    if (m < 1) throw Error("cyclotomic index must be >= 1");
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
    std::vector<mpz_class> xm(m + 1, mpz_class(0));
    xm[0] = -1;
    xm[m] = 1;
    IntPolynomial num(std::move(xm));
    for (int d = 1; d < m; ++d)
        if (m % d == 0) num = num.divide_exact(cyclotomic(d));
    return num;
}

namespace {

// Pseudo-remainder of a by b, both nonzero, deg a >= deg b.
IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> rem = a.coeffs();
    const int db = b.degree();
    int dr = a.degree();
    const mpz_class& lb = b.leading();
    while (dr >= db) {
        // rem <- lb*rem - lead(rem)*x^{dr-db}*b
        const mpz_class lr = rem[dr];
        if (lr != 0) {
            for (int i = 0; i < dr; ++i) rem[i] *= lb;
            for (int j = 0; j < db; ++j) rem[dr - db + j] -= lr * b.coeff(j);
            rem[dr] = 0;
        }
        --dr;
    }
    while (dr >= 0 && rem[dr] == 0) --dr;
    if (dr < 0) return IntPolynomial();
    rem.resize(dr + 1);
    return IntPolynomial(std::move(rem));
}

}  // namespace

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero()) return b.is_zero() ? IntPolynomial() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? IntPolynomial() : r.primitive_part();
    }
    return a.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) throw Error("squarefree part of the zero polynomial");
    if (p.degree() == 0) return IntPolynomial({1});
    IntPolynomial g = poly_gcd(p, p.derivative());
    return p.divide_exact(g).primitive_part();
}

namespace {

// Integer determinant by fraction-free Bareiss elimination.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_class q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = q;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

}  // namespace

mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const int da = a.degree();
    const int db = b.degree();
    if (da == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), a.leading().get_mpz_t(), db);
        return r;
    }
    if (db == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), b.leading().get_mpz_t(), da);
        return r;
    }
    const std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, mpz_class(0)));
    for (int row = 0; row < db; ++row)
        for (int j = 0; j <= da; ++j) m[row][row + j] = a.coeff(da - j);
    for (int row = 0; row < da; ++row)
        for (int j = 0; j <= db; ++j) m[db + row][row + j] = b.coeff(db - j);
    return bareiss_det(std::move(m));
}

RatPolynomial::RatPolynomial(IntPolynomial numerator, mpz_class denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
    if (den == 0) throw Error("rational polynomial with zero denominator");
    normalize();
}

void RatPolynomial::normalize() {
    if (den < 0) {
        den = -den;
        std::vector<mpz_class> neg = num.coeffs();
        for (mpz_class& c : neg) c = -c;
        num = IntPolynomial(std::move(neg));
    }
    if (num.is_zero()) {
        den = 1;
        return;
    }
    mpz_class g = num.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
    if (g > 1) {
        std::vector<mpz_class> cs = num.coeffs();
        for (mpz_class& c : cs) c /= g;
        num = IntPolynomial(std::move(cs));
        den /= g;
    }
}

std::complex<double> RatPolynomial::eval(std::complex<double> z) const {
    return num.eval(z) / den.get_d();
}

RatPolynomial RatPolynomial::derivative() const {
    return RatPolynomial(num.derivative(), den);
}

IntPolynomial coordinate_min_poly(const IntPolynomial& M, const RatPolynomial& g) {
    if (M.degree() < 1) throw Error("primitive minimal polynomial must have degree >= 1");
    if (M.degree() > 12)
        throw Error("exact coordinate minimal polynomial supported only for primitive degree <= 12 "
                    "(got degree " + std::to_string(M.degree()) + "); supply coord_min_polys");
    if (g.is_zero()) throw Error("coordinate expression is zero");
    const int D = M.degree();
    if (g.num.degree() == 0) {
        // Rational coordinate c/den: minimal polynomial den*x - c.
        return IntPolynomial(std::vector<mpz_class>{mpz_class(-g.num.coeff(0)), g.den}).primitive_part();
    }
    // R(t) = Res_y(M(y), den*t - g(y)) is den^D * a_M^{deg g} * prod_j (t - g(gamma_j)/den),
    // a degree-D polynomial in t; recover it by evaluation at D+1 integer points and
    // exact interpolation, then take the squarefree part.
    std::vector<mpz_class> ts, vals;
    for (int k = 0; k <= D; ++k) {
        mpz_class t = (k % 2 == 0) ? mpz_class(k / 2) : mpz_class(-(k + 1) / 2);
        std::vector<mpz_class> nc = g.num.coeffs();
        for (mpz_class& c : nc) c = -c;
        if (nc.empty()) nc.resize(1, mpz_class(0));
        nc[0] += g.den * t;
        IntPolynomial Nt(std::move(nc));  // den*t - g(y) as a polynomial in y
        vals.push_back(resultant(M, Nt));
        ts.push_back(std::move(t));
    }
    // Newton divided differences over Q (denominators must clear in the final result).
    const std::size_t n = ts.size();
    std::vector<mpq_class> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = mpq_class(vals[i]);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(ts[i] - ts[i - level]);
            if (i == level) break;
        }
    // Expand the Newton form into monomial coefficients.
    std::vector<mpq_class> poly{dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        poly.insert(poly.begin(), mpq_class(0));
        for (std::size_t j = 0; j + 1 < poly.size(); ++j) poly[j] -= mpq_class(ts[i]) * poly[j + 1];
        poly[0] += dd[i];
        // poly <- poly*(x - t_i) + dd[i], expressed via the shift above
    }
    std::vector<mpz_class> R(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        mpq_class q = poly[i];
        q.canonicalize();
        if (q.get_den() != 1) throw Error("resultant interpolation produced a non-integer coefficient");
        R[i] = q.get_num();
    }
    IntPolynomial res(std::move(R));
    if (res.is_zero() || res.degree() < 1)
        throw Error("degenerate resultant while deriving a coordinate minimal polynomial");
    return squarefree_part(res.primitive_part());
}

}  // namespace eqd
