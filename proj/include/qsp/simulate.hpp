#ifndef QSP_SIMULATE_HPP
#define QSP_SIMULATE_HPP

#include <map>
#include <vector>

#include "qsp/decompose.hpp"
#include "qsp/protocols.hpp"
#include "qsp/state.hpp"

namespace qsp {

/// The product A_n w A_{n-1} ... w A_0 |0> at a point z on the unit circle.
Eigen::VectorXcd eval_protocol(const Protocol& p, cplx z);

/// Symbolic expansion of the protocol into its polynomial state, by
/// alternating unitary application and per-row power shifts. The round-trip
/// oracle for every decomposition.
PolynomialState protocol_to_state(const Protocol& p);

/// One spectrum entry: an eigenphase phi (eigenvalue e^{2 pi i phi}) with
/// its input amplitude.
struct SpectrumEntry {
    double phase = 0.0;
    cplx amplitude;
};

/// Joint amplitude table T(x, s) = alpha_s * (protocol at e^{2 pi i phi_s})_x.
Eigen::MatrixXcd eigen_transform(const Protocol& p, const std::vector<SpectrumEntry>& spectrum);

/// Marginal P(x) = sum_s |T(x, s)|^2 over the control register.
Eigen::VectorXd control_distribution(const Eigen::MatrixXcd& table);

struct DiscreteLogResult {
    double success_probability = 0.0;
    std::map<int, double> recovered;                  // recovered log -> probability
    std::vector<std::vector<double>> joint;           // joint[x][y] outcome probabilities
};

/// Exact simulation of the two parallel protocols on the identity-element
/// input (uniform eigenstate mixture): outcomes (x, y) = (s ell, s), and
/// every invertible y recovers ell = x y^{-1} mod N.
DiscreteLogResult run_discrete_log(int order, int log_value);

struct PhaseLocationProbe {
    double theta = 0.0;
    int arc = -1;
    double probability = 0.0; // mass on the correct arc index
};

/// Synthesizes the phase-location state and reads off the correct-arc
/// probability at each test phase. Phases must lie at least gap/2 inside
/// their arcs.
std::vector<PhaseLocationProbe> run_phase_location(const PolynomialState& state, const ArcSpec& spec,
                                                   const std::vector<double>& test_phases);

} // namespace qsp

#endif
