#include "qsp/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsp/errors.hpp"

namespace qsp {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

constexpr double kValidityTol = 1e-8;

void require_analytic(const PolynomialState& s, const char* what) {
    if (s.min_power() < 0) {
        raise(errc::invalid_state, std::string(what) + " requires an analytic state (min power >= 0)");
    }
}

int first_one_column(const SignalOperator& op) {
    for (int c = 0; c < op.dim(); ++c) {
        if (op.exponent(c) == 1) return c;
    }
    raise(errc::invalid_argument, "signal operator has no exponent-1 column");
}

bool is_single_step(const SignalOperator& op) {
    bool seen_zero = false;
    bool seen_one = false;
    for (int e : op.exponents()) {
        if (e == 0) {
            if (seen_one) return false; // zeros must precede ones
            seen_zero = true;
        } else if (e == 1) {
            seen_one = true;
        } else {
            return false;
        }
    }
    return seen_zero && seen_one;
}

// Restrict the state to powers [lo, hi], dropping whatever residue the
// reduction left outside. The drop is exactly the round-trip error, so it
// must stay below the budget.
PolynomialState drop_out_of_range(const PolynomialState& s, int lo, int hi, double budget,
                                  errc code) {
    double residue = 0.0;
    std::vector<VectorXcd> kept(static_cast<std::size_t>(hi - lo + 1), VectorXcd::Zero(s.dim()));
    for (int k = s.min_power(); k <= s.degree(); ++k) {
        const VectorXcd g = s.gamma(k);
        if (k < lo || k > hi) {
            residue = std::max(residue, g.cwiseAbs().maxCoeff());
        } else {
            kept[static_cast<std::size_t>(k - lo)] = g;
        }
    }
    if (residue > budget) {
        raise(code, "reduction left out-of-range coefficients of magnitude " +
                        std::to_string(residue));
    }
    return PolynomialState(s.dim(), lo, std::move(kept));
}

// Reduction step without revalidating the state; decompose_linear checks
// validity once and each step preserves it analytically.
std::pair<UnitaryMatrix, PolynomialState> linear_reduce_unchecked(const PolynomialState& s,
                                                                  const SignalOperator& op) {
    const int n = s.degree();
    const VectorXcd top = s.gamma(n);
    const VectorXcd bottom = s.gamma(0);
    const double top_norm = top.norm();
    const double bottom_norm = bottom.norm();

    std::map<int, VectorXcd> columns;
    columns[first_one_column(op)] = top / top_norm;
    if (bottom_norm > 0.0) {
        columns[0] = bottom / bottom_norm;
    }
    UnitaryMatrix a = gram_schmidt_complete(columns, s.dim());
    PolynomialState reduced = apply_signal_adjoint(s.apply_unitary(a.mat().adjoint()), op);
    // Validity bounds <gamma_0|gamma_n> and with it the residue size.
    const double budget = 10.0 * kValidityTol * std::max(1.0, top_norm * std::max(bottom_norm, 1.0));
    return {std::move(a), drop_out_of_range(reduced, 0, n - 1, budget, errc::invalid_state)};
}

} // namespace

SignalOperator::SignalOperator(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.size() < 2) raise(errc::invalid_argument, "signal operator needs dimension >= 2");
    if (std::all_of(exponents_.begin(), exponents_.end(),
                    [&](int e) { return e == exponents_.front(); })) {
        raise(errc::invalid_argument, "signal operator with equal exponents is a global phase");
    }
}

SignalOperator SignalOperator::single_step(int dim, int split_zeros) {
    if (split_zeros < 1 || split_zeros >= dim) {
        raise(errc::invalid_argument, "split must leave at least one 1 and one z on the diagonal");
    }
    std::vector<int> exps(static_cast<std::size_t>(dim), 1);
    std::fill(exps.begin(), exps.begin() + split_zeros, 0);
    return SignalOperator(std::move(exps));
}

SignalOperator SignalOperator::exponential(int bits) {
    if (bits < 1 || bits > 20) raise(errc::invalid_argument, "bits out of range");
    return exponential_dim(1 << bits);
}

SignalOperator SignalOperator::exponential_dim(int dim) {
    std::vector<int> exps(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) exps[static_cast<std::size_t>(k)] = k;
    return SignalOperator(std::move(exps));
}

SignalOperator SignalOperator::laurent_single(int dim, int split_zeros) {
    if (split_zeros < 1 || split_zeros >= dim) {
        raise(errc::invalid_argument, "split must leave at least one z^-1 and one z on the diagonal");
    }
    std::vector<int> exps(static_cast<std::size_t>(dim), 1);
    std::fill(exps.begin(), exps.begin() + split_zeros, -1);
    return SignalOperator(std::move(exps));
}

SignalOperator SignalOperator::laurent_exponential(int bits) {
    if (bits < 1 || bits > 20) raise(errc::invalid_argument, "bits out of range");
    const int dim = 1 << bits;
    std::vector<int> exps(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) exps[static_cast<std::size_t>(k)] = 2 * k - (dim - 1);
    return SignalOperator(std::move(exps));
}

PolynomialState apply_signal_adjoint(const PolynomialState& s, const SignalOperator& op) {
    if (s.dim() != op.dim()) raise(errc::dimension_mismatch, "signal operator does not match state");
    if (s.is_zero()) return s;
    const auto& exps = op.exponents();
    const int min_exp = *std::min_element(exps.begin(), exps.end());
    const int max_exp = *std::max_element(exps.begin(), exps.end());
    const int lo = s.min_power() - max_exp;
    const int hi = s.degree() - min_exp;
    std::vector<VectorXcd> gammas(static_cast<std::size_t>(hi - lo + 1),
                                  VectorXcd::Zero(s.dim()));
    for (int k = s.min_power(); k <= s.degree(); ++k) {
        const VectorXcd g = s.gamma(k);
        for (int x = 0; x < s.dim(); ++x) {
            gammas[static_cast<std::size_t>(k - exps[static_cast<std::size_t>(x)] - lo)](x) = g(x);
        }
    }
    return PolynomialState(s.dim(), lo, std::move(gammas));
}

PolynomialState apply_signal(const PolynomialState& s, const SignalOperator& op) {
    std::vector<int> negated = op.exponents();
    for (int& e : negated) e = -e;
    return apply_signal_adjoint(s, SignalOperator(std::move(negated)));
}

std::pair<UnitaryMatrix, PolynomialState> linear_reduce(const PolynomialState& s,
                                                        const SignalOperator& op) {
    if (!is_single_step(op)) raise(errc::invalid_argument, "linear_reduce needs a single-step operator");
    if (s.dim() != op.dim()) raise(errc::dimension_mismatch, "signal operator does not match state");
    require_analytic(s, "linear_reduce");
    if (s.degree() < 1) raise(errc::degree_zero, "state already has degree 0");
    const ValidityReport report = s.validity(kValidityTol);
    if (!report.valid) {
        raise(errc::invalid_state, "state is not normalized on the circle (max deviation " +
                                       std::to_string(report.max_deviation) + ")");
    }
    return linear_reduce_unchecked(s, op);
}

std::pair<UnitaryMatrix, PolynomialState> exponential_reduce(const PolynomialState& s, int bits,
                                                             double tol) {
    const int dim = 1 << bits;
    if (s.dim() != dim) raise(errc::dimension_mismatch, "state dimension must be 2^bits");
    require_analytic(s, "exponential_reduce");
    const int n = s.degree();
    if (n < dim - 1) raise(errc::degree_zero, "degree below 2^b - 1; nothing to reduce");
    const ValidityReport report = s.validity(kValidityTol);
    if (!report.valid) {
        raise(errc::invalid_state, "state is not normalized on the circle (max deviation " +
                                       std::to_string(report.max_deviation) + ")");
    }

    const MatrixXcd gamma0 = s.coefficient_matrix(0).entries;
    const MatrixXcd gamma_top = s.coefficient_matrix(n - (dim - 1)).entries;
    const MatrixXcd product = gamma0.adjoint() * gamma_top;
    double worst_upper = 0.0;
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            worst_upper = std::max(worst_upper, std::abs(product(i, j)));
        }
    }
    const double scale = std::max(1.0, gamma0.cwiseAbs().maxCoeff() * gamma_top.cwiseAbs().maxCoeff());
    if (worst_upper > tol * scale) {
        raise(errc::condition_not_met,
              "state is not one-step reducible: Gamma_0^dag Gamma_" + std::to_string(n - (dim - 1)) +
                  " has strict-upper magnitude " + std::to_string(worst_upper));
    }

    UnitaryMatrix q = simultaneous_triangularize(gamma0, gamma_top, tol);
    PolynomialState reduced =
        apply_signal_adjoint(s.apply_unitary(q.mat().adjoint()), SignalOperator::exponential(bits));
    const double budget = 10.0 * tol * (gamma0.cwiseAbs().maxCoeff() + gamma_top.cwiseAbs().maxCoeff());
    return {std::move(q),
            drop_out_of_range(reduced, 0, n - (dim - 1), std::max(budget, 10.0 * tol),
                              errc::condition_not_met)};
}

Protocol decompose_linear(const PolynomialState& s, int split_zeros) {
    const SignalOperator op = SignalOperator::single_step(s.dim(), split_zeros);
    require_analytic(s, "decompose_linear");
    const ValidityReport report = s.validity(kValidityTol);
    if (!report.valid) {
        raise(errc::invalid_state, "state is not normalized on the circle (max deviation " +
                                       std::to_string(report.max_deviation) + ")");
    }

    std::vector<UnitaryMatrix> reversed;
    PolynomialState current = s;
    while (current.degree() >= 1) {
        auto [a, reduced] = linear_reduce_unchecked(current, op);
        reversed.push_back(std::move(a));
        current = std::move(reduced);
    }

    const VectorXcd constant = current.gamma(0);
    std::vector<UnitaryMatrix> unitaries;
    unitaries.reserve(reversed.size() + 1);
    unitaries.push_back(gram_schmidt_complete({{0, constant}}, s.dim()));
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
        unitaries.push_back(std::move(*it));
    }
    return Protocol{op, std::move(unitaries)};
}

Protocol decompose_one_step(const PolynomialState& s, int bits, double tol) {
    const int dim = 1 << bits;
    if (s.dim() != dim) raise(errc::dimension_mismatch, "state dimension must be 2^bits");
    if (s.min_power() < 0 || s.degree() > dim - 1) {
        raise(errc::degree_too_high, "one-step synthesis needs powers within [0, 2^b - 1]");
    }

    double worst_overlap = 0.0;
    for (int j = 0; j < dim; ++j) {
        for (int k = j + 1; k < dim; ++k) {
            const VectorXcd gj = s.gamma(j);
            const VectorXcd gk = s.gamma(k);
            const double overlap = std::abs(gj.dot(gk));
            worst_overlap = std::max(worst_overlap, overlap);
            if (overlap > tol * std::max(1.0, gj.norm() * gk.norm())) {
                raise(errc::orthogonality_violated,
                      "coefficient vectors are not pairwise orthogonal (max overlap " +
                          std::to_string(worst_overlap) + ")");
            }
        }
    }
    const ValidityReport report = s.validity(kValidityTol);
    if (!report.valid) {
        raise(errc::invalid_state, "state is not normalized on the circle (max deviation " +
                                       std::to_string(report.max_deviation) + ")");
    }

    std::map<int, VectorXcd> columns;
    VectorXcd norms = VectorXcd::Zero(dim);
    for (int k = 0; k < dim; ++k) {
        const VectorXcd g = s.gamma(k);
        const double norm = g.norm();
        norms(k) = norm;
        if (norm > 0.0) columns[k] = g / norm;
    }
    UnitaryMatrix a1 = gram_schmidt_complete(columns, dim);
    UnitaryMatrix a0 = gram_schmidt_complete({{0, norms / norms.norm()}}, dim);
    std::vector<UnitaryMatrix> unitaries;
    unitaries.push_back(std::move(a0));
    unitaries.push_back(std::move(a1));
    return Protocol{SignalOperator::exponential(bits), std::move(unitaries)};
}

PolynomialState laurent_to_analytic(const PolynomialState& s, int n_steps) {
    if (n_steps < 0) raise(errc::invalid_argument, "n_steps must be nonnegative");
    if (s.is_zero()) return s;
    if (s.min_power() < -n_steps || s.degree() > n_steps) {
        raise(errc::range_exceeded, "state powers exceed [-n_steps, n_steps]");
    }
    const int parity = ((n_steps % 2) + 2) % 2;
    std::vector<VectorXcd> gammas(static_cast<std::size_t>(n_steps + 1),
                                  VectorXcd::Zero(s.dim()));
    for (int k = s.min_power(); k <= s.degree(); ++k) {
        const VectorXcd g = s.gamma(k);
        if (g.isZero(0.0)) continue;
        if (((k % 2) + 2) % 2 != parity) {
            raise(errc::parity_violated,
                  "power " + std::to_string(k) + " does not have parity n_steps mod 2");
        }
        gammas[static_cast<std::size_t>((k + n_steps) / 2)] = g;
    }
    return PolynomialState(s.dim(), 0, std::move(gammas));
}

Protocol decompose_laurent(const PolynomialState& s, int split_zeros) {
    const int n_steps = std::max({0, -s.min_power(), s.degree()});
    PolynomialState analytic = laurent_to_analytic(s, n_steps);
    Protocol inner = decompose_linear(analytic, split_zeros);

    // The analytic synthesis may come out shorter than n_steps when the
    // Laurent range is widest on the negative side; pad with identity
    // steps next to A_0 (w fixes |0> since its first exponent is 0).
    std::vector<UnitaryMatrix> unitaries;
    const int pad = n_steps + 1 - static_cast<int>(inner.unitaries.size());
    for (int i = 0; i < pad; ++i) {
        unitaries.emplace_back(Eigen::MatrixXcd::Identity(s.dim(), s.dim()));
    }
    for (auto& u : inner.unitaries) unitaries.push_back(std::move(u));
    return Protocol{SignalOperator::laurent_single(s.dim(), split_zeros), std::move(unitaries)};
}

} // namespace qsp
