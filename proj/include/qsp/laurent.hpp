#ifndef QSP_LAURENT_HPP
#define QSP_LAURENT_HPP

#include <complex>
#include <vector>

namespace qsp {

using cplx = std::complex<double>;

/// A complex Laurent polynomial stored as a dense coefficient run:
/// coefficients()[i] multiplies z^(min_exponent() + i). The zero polynomial
/// is canonically the empty run with min_exponent 0. Construction trims
/// exactly-zero leading/trailing coefficients; use trimmed(tol) for
/// tolerance-based cleanup after numerical work.
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    LaurentPolynomial(int min_exponent, std::vector<cplx> coefficients);

    static LaurentPolynomial zero() { return {}; }
    static LaurentPolynomial constant(cplx value);
    static LaurentPolynomial monomial(cplx value, int exponent);

    bool is_zero() const { return coefficients_.empty(); }
    int min_exponent() const { return min_exponent_; }
    int max_exponent() const { return min_exponent_ + static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<cplx>& coefficients() const { return coefficients_; }

    /// Coefficient of z^k (zero outside the stored run).
    cplx coeff(int k) const;

    double max_coeff_norm() const;

    /// Evaluate at z by Horner on the analytic part times z^min_exponent.
    /// z = 0 with negative exponents is a DomainError.
    cplx eval(cplx z) const;

    /// q with q(z) = conj(p(z)) on the unit circle: conjugate coefficients,
    /// exponent k -> -k.
    LaurentPolynomial conj_reflect() const;

    /// Argument rotation z -> z e^{-i phase}: coefficient c_k -> c_k e^{-ik phase}.
    LaurentPolynomial rotated(double phase) const;

    /// Coefficient-wise shift by z^shift.
    LaurentPolynomial shifted(int shift) const;

    /// Drop leading/trailing coefficients of magnitude <= tol.
    LaurentPolynomial trimmed(double tol) const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);

    friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs);
    friend LaurentPolynomial operator*(cplx scalar, const LaurentPolynomial& p);

  private:
    void trim_exact();

    int min_exponent_ = 0;
    std::vector<cplx> coefficients_;
};

} // namespace qsp

#endif
