#include "qsp/kernels.hpp"

#include <cmath>

namespace qsp::kernels {

namespace {

// Below these sizes thread start-up dominates; fall through to the serial loop.
constexpr std::ptrdiff_t kConvolveParallelCutoff = 512;
constexpr std::ptrdiff_t kColumnsParallelCutoff = 16;
constexpr std::ptrdiff_t kGridParallelCutoff = 64;

cplx conv_entry(const std::vector<cplx>& a, const std::vector<cplx>& b, std::ptrdiff_t i) {
    const std::ptrdiff_t na = static_cast<std::ptrdiff_t>(a.size());
    const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(b.size());
    const std::ptrdiff_t j_lo = std::max<std::ptrdiff_t>(0, i - nb + 1);
    const std::ptrdiff_t j_hi = std::min(na - 1, i);
    cplx acc = 0.0;
    for (std::ptrdiff_t j = j_lo; j <= j_hi; ++j) {
        acc += a[j] * b[i - j];
    }
    return acc;
}

cplx horner_on_circle(const LaurentPolynomial& p, double theta) {
    const cplx z = std::polar(1.0, theta);
    cplx acc = 0.0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc * std::polar(1.0, theta * p.min_exponent());
}

cplx overlap_sum(const std::vector<Eigen::VectorXcd>& gammas, std::ptrdiff_t m) {
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(gammas.size());
    cplx acc = 0.0;
    for (std::ptrdiff_t k = 0; k + m < count; ++k) {
        acc += gammas[k].dot(gammas[k + m]); // Eigen's dot conjugates the left argument
    }
    return acc;
}

} // namespace

std::vector<cplx> convolve_serial(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<cplx> out(a.size() + b.size() - 1);
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(out.size()); ++i) {
        out[i] = conv_entry(a, b, i);
    }
    return out;
}

std::vector<cplx> convolve(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.empty() || b.empty()) return {};
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size() + b.size() - 1);
    if (n < kConvolveParallelCutoff) return convolve_serial(a, b);
    std::vector<cplx> out(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = conv_entry(a, b, i);
    }
    return out;
}

std::vector<Eigen::VectorXcd> apply_matrix_to_columns_serial(const Eigen::MatrixXcd& m,
                                                             const std::vector<Eigen::VectorXcd>& cols) {
    std::vector<Eigen::VectorXcd> out(cols.size());
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(cols.size()); ++k) {
        out[k] = m * cols[k];
    }
    return out;
}

std::vector<Eigen::VectorXcd> apply_matrix_to_columns(const Eigen::MatrixXcd& m,
                                                      const std::vector<Eigen::VectorXcd>& cols) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(cols.size());
    if (n < kColumnsParallelCutoff) return apply_matrix_to_columns_serial(m, cols);
    std::vector<Eigen::VectorXcd> out(cols.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        out[k] = m * cols[k];
    }
    return out;
}

std::vector<cplx> eval_on_circle_serial(const LaurentPolynomial& p, const std::vector<double>& thetas) {
    std::vector<cplx> out(thetas.size());
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(thetas.size()); ++i) {
        out[i] = horner_on_circle(p, thetas[i]);
    }
    return out;
}

std::vector<cplx> eval_on_circle(const LaurentPolynomial& p, const std::vector<double>& thetas) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(thetas.size());
    if (n < kGridParallelCutoff) return eval_on_circle_serial(p, thetas);
    std::vector<cplx> out(thetas.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = horner_on_circle(p, thetas[i]);
    }
    return out;
}

std::vector<cplx> column_overlaps_serial(const std::vector<Eigen::VectorXcd>& gammas) {
    std::vector<cplx> out(gammas.size());
    for (std::ptrdiff_t m = 0; m < static_cast<std::ptrdiff_t>(gammas.size()); ++m) {
        out[m] = overlap_sum(gammas, m);
    }
    return out;
}

std::vector<cplx> column_overlaps(const std::vector<Eigen::VectorXcd>& gammas) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(gammas.size());
    if (n < kColumnsParallelCutoff) return column_overlaps_serial(gammas);
    std::vector<cplx> out(gammas.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t m = 0; m < n; ++m) {
        out[m] = overlap_sum(gammas, m);
    }
    return out;
}

} // namespace qsp::kernels
