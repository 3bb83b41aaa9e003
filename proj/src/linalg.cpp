#include "qsp/linalg.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qsp/errors.hpp"
#include "qsp/laurent.hpp"

namespace qsp {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// Two rounds of projection keep the residual orthogonal to working precision.
VectorXcd project_out(VectorXcd v, const std::vector<VectorXcd>& basis) {
    for (int round = 0; round < 2; ++round) {
        for (const auto& q : basis) {
            v -= q.dot(v) * q;
        }
    }
    return v;
}

/// First canonical basis vector with a usable residual against `basis`,
/// normalized. Existence is guaranteed while basis has fewer than dim
/// elements: the best residual norm is at least 1/sqrt(dim).
VectorXcd canonical_completion_pick(const std::vector<VectorXcd>& basis, int dim) {
    const double threshold = 0.5 / std::sqrt(static_cast<double>(dim));
    for (int i = 0; i < dim; ++i) {
        VectorXcd e = VectorXcd::Zero(dim);
        e(i) = 1.0;
        VectorXcd r = project_out(std::move(e), basis);
        const double norm = r.norm();
        if (norm >= threshold) return r / norm;
    }
    raise(errc::degenerate_input, "orthonormal completion failed");
}

/// Orthonormalize `extra` columns inside the complement of `basis`,
/// dropping near-zero residuals. Returns basis + the new vectors.
std::vector<VectorXcd> extend_basis(std::vector<VectorXcd> basis, const std::vector<VectorXcd>& extra,
                                    double zero_threshold) {
    for (const auto& v : extra) {
        VectorXcd r = project_out(v, basis);
        const double norm = r.norm();
        if (norm > zero_threshold) basis.push_back(r / norm);
    }
    return basis;
}

} // namespace

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd entries, double tolerance)
    : entries_(std::move(entries)), tolerance_(tolerance) {
    if (entries_.rows() != entries_.cols()) {
        raise(errc::dimension_mismatch, "unitary matrix must be square");
    }
    if (!is_unitary(entries_, tolerance_)) {
        raise(errc::invalid_argument, "matrix is not unitary within tolerance");
    }
}

bool is_unitary(const Eigen::MatrixXcd& m, double tol) {
    if (m.rows() != m.cols()) raise(errc::dimension_mismatch, "unitarity check needs a square matrix");
    const MatrixXcd gram = m.adjoint() * m;
    return (gram - MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

UnitaryMatrix gram_schmidt_complete(const std::map<int, Eigen::VectorXcd>& designated_columns,
                                    int dim) {
    constexpr double kOrthogonalityTol = 1e-8;
    if (dim <= 0) raise(errc::invalid_argument, "dimension must be positive");
    for (const auto& [index, v] : designated_columns) {
        if (index < 0 || index >= dim) raise(errc::range_exceeded, "designated column index out of range");
        if (v.size() != dim) raise(errc::dimension_mismatch, "designated column has wrong length");
        if (v.norm() == 0.0) raise(errc::degenerate_input, "designated column is zero");
    }
    for (auto it = designated_columns.begin(); it != designated_columns.end(); ++it) {
        for (auto jt = std::next(it); jt != designated_columns.end(); ++jt) {
            const double overlap = std::abs(it->second.dot(jt->second));
            if (overlap > kOrthogonalityTol * it->second.norm() * jt->second.norm()) {
                raise(errc::degenerate_input, "designated columns are not orthogonal (overlap " +
                                                  std::to_string(overlap) + ")");
            }
        }
    }

    MatrixXcd q(dim, dim);
    std::vector<VectorXcd> placed;
    placed.reserve(static_cast<std::size_t>(dim));
    // Inputs may carry an orthogonality defect up to the tolerance; a pass of
    // MGS in index order absorbs it so the result is unitary to working
    // precision while moving each column by at most that defect.
    for (const auto& [index, v] : designated_columns) {
        VectorXcd r = project_out(v / v.norm(), placed);
        q.col(index) = r / r.norm();
        placed.push_back(q.col(index));
    }
    for (int c = 0; c < dim; ++c) {
        if (designated_columns.count(c)) continue;
        q.col(c) = canonical_completion_pick(placed, dim);
        placed.push_back(q.col(c));
    }
    return UnitaryMatrix(std::move(q));
}

UnitaryMatrix qr_upper(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) raise(errc::dimension_mismatch, "qr_upper needs a square matrix");
    Eigen::HouseholderQR<MatrixXcd> qr(a);
    MatrixXcd q = qr.householderQ();
    // Sign convention: rotate column phases so Q^dag A has a real
    // nonnegative diagonal. Makes the factorization deterministic.
    const MatrixXcd r = q.adjoint() * a;
    for (int i = 0; i < a.rows(); ++i) {
        const cplx d = r(i, i);
        if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
    }
    return UnitaryMatrix(std::move(q));
}

UnitaryMatrix simultaneous_triangularize(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                         double tol) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        raise(errc::dimension_mismatch, "matrices must be square and equally sized");
    }
    const int n = static_cast<int>(a.rows());
    if (n == 0) raise(errc::invalid_argument, "empty matrices");

    const double scale_a = a.cwiseAbs().maxCoeff();
    const double scale_b = b.cwiseAbs().maxCoeff();
    const MatrixXcd product = a.adjoint() * b;
    double worst_upper = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            worst_upper = std::max(worst_upper, std::abs(product(i, j)));
        }
    }
    if (worst_upper > tol * std::max(1.0, scale_a * scale_b)) {
        raise(errc::precondition_violated,
              "A^dag B is not lower triangular (max strict-upper magnitude " +
                  std::to_string(worst_upper) + ")");
    }

    // The Appendix-style branch on exact zero columns needs a scale-aware cutoff.
    const double zero_threshold = 1e-12 * (std::max(scale_a, scale_b) + 1.0);

    MatrixXcd q(n, n);
    std::vector<VectorXcd> fixed;
    fixed.reserve(static_cast<std::size_t>(n));

    // Iterative version of the shrinking-window recursion (no deep call
    // stacks for large n). Columns of the window's submatrices are the
    // original columns projected into the complement of the fixed set.
    int lo = 0;
    int hi = n - 1;
    while (lo <= hi) {
        if (lo == hi) {
            q.col(lo) = canonical_completion_pick(fixed, n);
            fixed.push_back(q.col(lo));
            break;
        }

        VectorXcd pa = project_out(a.col(lo), fixed);
        if (pa.norm() > zero_threshold) {
            q.col(lo) = pa / pa.norm();
        } else {
            // Window column of A is zero: pick any unit vector orthogonal to
            // the remaining columns of B (projected), so the B-side row
            // condition still holds.
            std::vector<VectorXcd> span = fixed;
            std::vector<VectorXcd> b_cols;
            for (int j = lo + 1; j <= hi; ++j) b_cols.push_back(b.col(j));
            span = extend_basis(std::move(span), b_cols, zero_threshold);
            q.col(lo) = canonical_completion_pick(span, n);
        }
        fixed.push_back(q.col(lo));

        VectorXcd pb = project_out(b.col(hi), fixed);
        if (pb.norm() > zero_threshold) {
            q.col(hi) = pb / pb.norm();
        } else {
            // Mirror branch for a zero window column of B: stay orthogonal
            // to the remaining columns of A.
            std::vector<VectorXcd> span = fixed;
            std::vector<VectorXcd> a_cols;
            for (int j = lo; j < hi; ++j) a_cols.push_back(a.col(j));
            span = extend_basis(std::move(span), a_cols, zero_threshold);
            q.col(hi) = canonical_completion_pick(span, n);
        }
        fixed.push_back(q.col(hi));

        ++lo;
        --hi;
    }
    return UnitaryMatrix(std::move(q));
}

} // namespace qsp
