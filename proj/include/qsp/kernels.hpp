#ifndef QSP_KERNELS_HPP
#define QSP_KERNELS_HPP

#include <vector>

#include <Eigen/Dense>

#include "qsp/laurent.hpp"

namespace qsp::kernels {

// Data-parallel inner loops. Each kernel has a serial reference twin used by
// the tests and the benchmark; the unsuffixed entry points run the OpenMP
// variant when the library is built with OpenMP. Every output element is
// computed independently, so both variants produce bit-identical results.

std::vector<cplx> convolve(const std::vector<cplx>& a, const std::vector<cplx>& b);
std::vector<cplx> convolve_serial(const std::vector<cplx>& a, const std::vector<cplx>& b);

std::vector<Eigen::VectorXcd> apply_matrix_to_columns(const Eigen::MatrixXcd& m,
                                                      const std::vector<Eigen::VectorXcd>& cols);
std::vector<Eigen::VectorXcd> apply_matrix_to_columns_serial(const Eigen::MatrixXcd& m,
                                                             const std::vector<Eigen::VectorXcd>& cols);

/// Evaluate p at e^{i theta} for every angle.
std::vector<cplx> eval_on_circle(const LaurentPolynomial& p, const std::vector<double>& thetas);
std::vector<cplx> eval_on_circle_serial(const LaurentPolynomial& p, const std::vector<double>& thetas);

/// Overlap sums g_m = sum_k <gammas[k], gammas[k+m]> for m = 0..gammas.size()-1.
std::vector<cplx> column_overlaps(const std::vector<Eigen::VectorXcd>& gammas);
std::vector<cplx> column_overlaps_serial(const std::vector<Eigen::VectorXcd>& gammas);

} // namespace qsp::kernels

#endif
