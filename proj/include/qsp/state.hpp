#ifndef QSP_STATE_HPP
#define QSP_STATE_HPP

#include <vector>

#include <Eigen/Dense>

#include "qsp/laurent.hpp"

namespace qsp {

struct ValidityReport {
    bool valid = false;
    double max_deviation = 0.0; // worst |coefficient - expected| of the Gram polynomial
    int worst_power = 0;
};

/// Coefficient matrix Gamma_j: columns are the dim consecutive coefficient
/// vectors starting at power start_power (zero columns where the state has
/// no coefficient).
struct CoefficientMatrix {
    Eigen::MatrixXcd entries;
    int start_power = 0;
};

/// A dim-d vector of Laurent polynomials stored by coefficient vectors:
/// gamma(k) is the length-d vector multiplying z^k. Zero coefficient vectors
/// at both ends are trimmed exactly; interior zeros are kept. Immutable
/// after construction.
class PolynomialState {
  public:
    /// Zero state of dimension 1 (useful as a placeholder in result structs).
    PolynomialState() : dim_(1) {}

    PolynomialState(int dim, int min_power, std::vector<Eigen::VectorXcd> gammas);

    static PolynomialState from_polynomials(const std::vector<LaurentPolynomial>& entries);
    static PolynomialState basis_state(int dim, int index);

    int dim() const { return dim_; }
    int min_power() const { return min_power_; }
    int degree() const { return min_power_ + static_cast<int>(gammas_.size()) - 1; }
    bool is_zero() const { return gammas_.empty(); }

    /// Number of stored coefficient vectors (degree - min_power + 1).
    int power_count() const { return static_cast<int>(gammas_.size()); }

    /// Coefficient vector of z^k; zero vector outside the stored range.
    Eigen::VectorXcd gamma(int k) const;

    const std::vector<Eigen::VectorXcd>& gammas() const { return gammas_; }

    /// Row x as a scalar Laurent polynomial P_x(z).
    LaurentPolynomial component(int x) const;

    Eigen::VectorXcd evaluate(cplx z) const;

    /// <gamma(z)|gamma(z)> as a Laurent polynomial, computed from exact
    /// coefficient inner products. Hermitian by construction: the -m
    /// coefficient is stored as the conjugate of the +m one.
    LaurentPolynomial gram_poly() const;

    ValidityReport validity(double tol = 1e-8) const;
    bool is_valid(double tol = 1e-8) const { return validity(tol).valid; }

    CoefficientMatrix coefficient_matrix(int start_power) const;

    PolynomialState apply_unitary(const Eigen::MatrixXcd& u) const;

    /// Multiply the whole state by the global phase z^shift.
    PolynomialState shifted(int shift) const;

    PolynomialState trimmed(double tol) const;

  private:
    void trim_zero_ends();

    int dim_ = 0;
    int min_power_ = 0;
    std::vector<Eigen::VectorXcd> gammas_;
};

} // namespace qsp

#endif
