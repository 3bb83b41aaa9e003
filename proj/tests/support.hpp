#ifndef QSP_TESTS_SUPPORT_HPP
#define QSP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numbers>
#include <random>
#include <vector>

#include "qsp/decompose.hpp"
#include "qsp/linalg.hpp"
#include "qsp/simulate.hpp"
#include "qsp/state.hpp"

namespace qsp::test {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

inline cplx random_complex(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    return {gauss(rng), gauss(rng)};
}

inline VectorXcd random_vector(std::mt19937_64& rng, int dim) {
    VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = random_complex(rng);
    return v;
}

inline MatrixXcd random_matrix(std::mt19937_64& rng, int dim) {
    MatrixXcd m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) m(r, c) = random_complex(rng);
    }
    return m;
}

inline MatrixXcd random_unitary(std::mt19937_64& rng, int dim) {
    return qr_upper(random_matrix(rng, dim)).mat();
}

inline LaurentPolynomial random_laurent(std::mt19937_64& rng, int min_exp, int max_exp) {
    std::vector<cplx> coeffs(static_cast<std::size_t>(max_exp - min_exp + 1));
    for (cplx& c : coeffs) c = random_complex(rng);
    return LaurentPolynomial(min_exp, std::move(coeffs));
}

inline Protocol random_protocol(std::mt19937_64& rng, int dim, int steps, int split) {
    std::vector<UnitaryMatrix> unitaries;
    for (int i = 0; i <= steps; ++i) unitaries.emplace_back(random_unitary(rng, dim));
    return Protocol{SignalOperator::single_step(dim, split), std::move(unitaries)};
}

/// Valid polynomial state of the exact given degree, generated by expanding
/// a random protocol.
inline PolynomialState random_protocol_state(std::mt19937_64& rng, int dim, int degree, int split) {
    while (true) {
        const PolynomialState s = protocol_to_state(random_protocol(rng, dim, degree, split));
        if (s.degree() == degree && s.min_power() == 0) return s;
        // A random step can cancel the top coefficient; extremely unlikely,
        // just draw again.
    }
}

/// State with pairwise orthogonal coefficient vectors and random positive
/// norms, placed at powers 0..degree.
inline PolynomialState random_orthogonal_state(std::mt19937_64& rng, int dim, int degree) {
    const MatrixXcd basis = random_unitary(rng, dim);
    std::uniform_real_distribution<double> uniform(0.2, 1.0);
    std::vector<double> weights(static_cast<std::size_t>(degree + 1));
    double total = 0.0;
    for (double& w : weights) {
        w = uniform(rng);
        total += w;
    }
    std::vector<VectorXcd> gammas;
    for (int k = 0; k <= degree; ++k) {
        gammas.push_back(std::sqrt(weights[static_cast<std::size_t>(k)] / total) * basis.col(k % dim));
    }
    return PolynomialState(dim, 0, std::move(gammas));
}

/// Max per-coefficient difference between two states over the union of
/// their power ranges.
inline double state_max_diff(const PolynomialState& a, const PolynomialState& b) {
    if (a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
    if (a.is_zero() && b.is_zero()) return 0.0;
    const int lo = std::min(a.is_zero() ? 0 : a.min_power(), b.is_zero() ? 0 : b.min_power());
    const int hi = std::max(a.is_zero() ? 0 : a.degree(), b.is_zero() ? 0 : b.degree());
    double worst = 0.0;
    for (int k = lo; k <= hi; ++k) {
        worst = std::max(worst, (a.gamma(k) - b.gamma(k)).cwiseAbs().maxCoeff());
    }
    return worst;
}

inline std::vector<double> circle_grid(int count) {
    std::vector<double> thetas(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        thetas[static_cast<std::size_t>(t)] = 2.0 * std::numbers::pi * t / count;
    }
    return thetas;
}

} // namespace qsp::test

#endif
