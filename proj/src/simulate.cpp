#include "qsp/simulate.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qsp/errors.hpp"

namespace qsp {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int mod_inverse(int value, int modulus) {
    int t = 0, new_t = 1;
    int r = modulus, new_r = value % modulus;
    while (new_r != 0) {
        const int q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1) raise(errc::invalid_argument, "value not invertible");
    return ((t % modulus) + modulus) % modulus;
}

} // namespace

VectorXcd eval_protocol(const Protocol& p, cplx z) {
    if (std::abs(std::abs(z) - 1.0) > 1e-12) {
        raise(errc::domain_error, "evaluation point is off the unit circle");
    }
    if (p.unitaries.empty()) raise(errc::invalid_argument, "protocol has no unitaries");
    const int dim = p.dim();
    for (const auto& u : p.unitaries) {
        if (u.dim() != dim) raise(errc::dimension_mismatch, "protocol unitary has wrong dimension");
    }

    VectorXcd v = p.unitaries.front().mat().col(0);
    std::map<int, cplx> powers;
    for (int e : p.signal.exponents()) {
        if (!powers.count(e)) powers[e] = std::pow(z, e);
    }
    for (std::size_t i = 1; i < p.unitaries.size(); ++i) {
        for (int x = 0; x < dim; ++x) {
            v(x) *= powers[p.signal.exponent(x)];
        }
        v = p.unitaries[i].mat() * v;
    }
    return v;
}

PolynomialState protocol_to_state(const Protocol& p) {
    if (p.unitaries.empty()) raise(errc::invalid_argument, "protocol has no unitaries");
    const int dim = p.dim();
    PolynomialState state = PolynomialState::basis_state(dim, 0).apply_unitary(p.unitaries.front().mat());
    for (std::size_t i = 1; i < p.unitaries.size(); ++i) {
        state = apply_signal(state, p.signal).apply_unitary(p.unitaries[i].mat());
    }
    return state;
}

MatrixXcd eigen_transform(const Protocol& p, const std::vector<SpectrumEntry>& spectrum) {
    if (spectrum.empty()) raise(errc::invalid_argument, "empty spectrum");
    double total = 0.0;
    for (const auto& entry : spectrum) total += std::norm(entry.amplitude);
    if (std::abs(total - 1.0) > 1e-10) {
        raise(errc::not_normalized, "input amplitudes have squared norm " + std::to_string(total));
    }
    MatrixXcd table(p.dim(), static_cast<int>(spectrum.size()));
    for (std::size_t s = 0; s < spectrum.size(); ++s) {
        table.col(static_cast<int>(s)) =
            spectrum[s].amplitude * eval_protocol(p, std::polar(1.0, kTwoPi * spectrum[s].phase));
    }
    return table;
}

VectorXd control_distribution(const Eigen::MatrixXcd& table) {
    VectorXd dist = VectorXd::Zero(table.rows());
    for (int x = 0; x < table.rows(); ++x) {
        for (int s = 0; s < table.cols(); ++s) {
            dist(x) += std::norm(table(x, s));
        }
    }
    return dist;
}

DiscreteLogResult run_discrete_log(int order, int log_value) {
    if (log_value < 0 || log_value >= order) {
        raise(errc::invalid_argument, "log value must lie in [0, order)");
    }
    auto [v_protocol, u_protocol] = build_discrete_log_protocols(order);

    DiscreteLogResult result;
    result.joint.assign(static_cast<std::size_t>(order),
                        std::vector<double>(static_cast<std::size_t>(order), 0.0));

    // Input |1> is the uniform superposition of eigenstates |u_s>; the V
    // register sees eigenvalue w^{s ell}, the U register w^s.
    for (int s = 0; s < order; ++s) {
        const VectorXcd vx =
            eval_protocol(v_protocol, std::polar(1.0, kTwoPi * ((s * log_value) % order) / order));
        const VectorXcd vy = eval_protocol(u_protocol, std::polar(1.0, kTwoPi * s / order));
        for (int x = 0; x < order; ++x) {
            for (int y = 0; y < order; ++y) {
                result.joint[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] +=
                    std::norm(vx(x) * vy(y)) / order;
            }
        }
    }

    for (int x = 0; x < order; ++x) {
        for (int y = 0; y < order; ++y) {
            const double mass = result.joint[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (mass == 0.0 || std::gcd(y, order) != 1) continue;
            const int recovered = (x * mod_inverse(y, order)) % order;
            result.recovered[recovered] += mass;
        }
    }
    if (result.recovered.count(log_value)) {
        result.success_probability = result.recovered.at(log_value);
    }
    return result;
}

std::vector<PhaseLocationProbe> run_phase_location(const PolynomialState& state, const ArcSpec& spec,
                                                   const std::vector<double>& test_phases) {
    spec.validate();
    std::vector<PhaseLocationProbe> probes;
    probes.reserve(test_phases.size());
    for (double theta : test_phases) {
        const int arc = spec.locate(theta, spec.gap / 2.0);
        if (arc < 0) {
            raise(errc::precondition_violated,
                  "test phase " + std::to_string(theta) + " is not gap/2 inside any arc");
        }
        probes.push_back({theta, arc, 0.0});
    }

    const Protocol protocol = decompose_linear(state, state.dim() / 2);
    for (auto& probe : probes) {
        const VectorXcd amps = eval_protocol(protocol, std::polar(1.0, probe.theta));
        probe.probability = std::norm(amps(probe.arc));
    }
    return probes;
}

} // namespace qsp
