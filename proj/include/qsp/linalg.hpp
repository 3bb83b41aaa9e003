#ifndef QSP_LINALG_HPP
#define QSP_LINALG_HPP

#include <map>

#include <Eigen/Dense>

namespace qsp {

/// Dense complex matrix checked to satisfy ||U^dag U - I||_max <= tolerance
/// at construction.
class UnitaryMatrix {
  public:
    explicit UnitaryMatrix(Eigen::MatrixXcd entries, double tolerance = 1e-10);

    const Eigen::MatrixXcd& mat() const { return entries_; }
    int dim() const { return static_cast<int>(entries_.rows()); }
    double tolerance() const { return tolerance_; }

  private:
    Eigen::MatrixXcd entries_;
    double tolerance_;
};

bool is_unitary(const Eigen::MatrixXcd& m, double tol);

/// Builds a unitary whose designated columns equal the normalized inputs.
/// The remaining columns complete an orthonormal basis deterministically:
/// free slots are filled smallest-index-first by sweeping the canonical
/// basis vectors through modified Gram-Schmidt.
UnitaryMatrix gram_schmidt_complete(const std::map<int, Eigen::VectorXcd>& designated_columns,
                                    int dim);

/// Unitary Q with Q^dag A upper triangular, diagonal real nonnegative.
UnitaryMatrix qr_upper(const Eigen::MatrixXcd& a);

/// Given A^dag B lower triangular (within tol, scale-aware), returns a
/// unitary Q with Q^dag A upper triangular and Q^dag B lower triangular.
/// Implemented by the two-sided bordering recursion: the first column of Q
/// comes from the first column of A, the last from the last column of B,
/// then the window shrinks. Zero columns take the dedicated branches
/// (orthogonal-to-span picks via deterministic completion).
UnitaryMatrix simultaneous_triangularize(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                         double tol);

} // namespace qsp

#endif
