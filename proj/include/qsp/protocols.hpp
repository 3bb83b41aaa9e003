#ifndef QSP_PROTOCOLS_HPP
#define QSP_PROTOCOLS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qsp/decompose.hpp"
#include "qsp/state.hpp"

namespace qsp {

/// Delta-family state of phase estimation: P_x(z) = (1/2^b) sum_k w^{-xk} z^k
/// over the 2^b-th roots of unity. Coefficient vectors are pairwise
/// orthogonal, so one exponential step synthesizes it.
PolynomialState build_phase_estimation_state(int bits);

/// Exponentially scaled modified Bessel function e^{-x} I_j(x), by downward
/// (Miller) recurrence normalized with I_0(x) + 2 sum_j I_j(x) = e^x.
double bessel_i_scaled(int j, double x);

/// Odd real-on-circle Laurent polynomial of degree n approximating
/// -erf(k sin theta) at z = e^{i theta}: the truncated Fourier-sine series,
/// which keeps only the harmonics sin((2j+1) theta).
LaurentPolynomial build_sign_poly(double k, int n);

struct SignPolyFit {
    LaurentPolynomial poly;
    int degree = 0;
    double max_error = 0.0; // against the erf target on a dense grid
};

/// Doubling rule: grow n from 2 ceil(k) + 1 until the grid error meets eps.
SignPolyFit fit_sign_poly(double k, double eps);

/// s half-open arcs [a, b) on the circle, pairwise separated by at least
/// gap; at most one arc may be longer than pi. Ends may exceed 2 pi to
/// express wrap-around.
struct ArcSpec {
    std::vector<std::pair<double, double>> arcs;
    double gap = 0.0;

    void validate() const;
    int count() const { return static_cast<int>(arcs.size()); }
    double length(int j) const { return arcs[static_cast<std::size_t>(j)].second - arcs[static_cast<std::size_t>(j)].first; }
    /// Index of the arc containing theta once shrunk by margin at both ends,
    /// or -1.
    int locate(double theta, double margin) const;
};

struct BuildReport {
    double grid_max_error = 0.0;
    double rescale_applied = 1.0;
    std::optional<double> truncation_bound;
};

struct PhaseLocationBuild {
    PolynomialState state;
    BuildReport report;
    int completed_arc = 0;
    double sign_wave_k = 0.0;
    int sign_degree = 0;
};

/// Window polynomials per arc from two rotated sign waves, the largest arc
/// filled in by completion, shifted to an analytic state. Per-arc guarantees
/// (>= 1 - eps' inside arcs shrunk by gap/2, <= eps' outside expanded arcs)
/// are checked on a dense grid.
PhaseLocationBuild build_phase_location_state(const ArcSpec& spec, double eps_prime);

struct GaussianWindowSpec {
    int n = 0;       // even state dimension
    double sigma = 0.0;
};

struct GaussianWindowBuild {
    PolynomialState state;
    BuildReport report;
    double window_norm = 0.0; // K
};

/// Truncated wrapped-gaussian window state: powers y in [-N/2, N/2-1]
/// shifted to [0, N-1] by a global phase, coefficient vectors proportional
/// to Fourier columns. The report carries the tail bound sigma e^{-N^2 sigma^2 / 2}.
GaussianWindowBuild build_gaussian_window_state(const GaussianWindowSpec& spec);

/// The two one-step protocols of the discrete-logarithm circuit over Z_N
/// (general N): uniform preparation then inverse DFT, with signal exponents
/// 0..N-1. First element is the V-register protocol, second the U-register.
std::pair<Protocol, Protocol> build_discrete_log_protocols(int order);

/// Inverse discrete Fourier transform over Z_n: entries w^{-xk} / sqrt(n).
Eigen::MatrixXcd inverse_dft_matrix(int n);

} // namespace qsp

#endif
