#include "qsp/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qsp/completion.hpp"
#include "qsp/errors.hpp"
#include "qsp/kernels.hpp"

namespace qsp {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

int next_power_of_two(int n) {
    int p = 1;
    while (p < n) p *= 2;
    return p;
}

/// Angular membership of theta in [start + margin, end - margin) on the circle.
bool inside_arc(double theta, double start, double end, double margin) {
    const double rel = wrap_angle(theta - start);
    return rel >= margin && rel < (end - start) - margin;
}

} // namespace

PolynomialState build_phase_estimation_state(int bits) {
    if (bits < 1 || bits > 12) raise(errc::invalid_argument, "bits must be in [1, 12]");
    const int dim = 1 << bits;
    std::vector<VectorXcd> gammas(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        VectorXcd g(dim);
        for (int x = 0; x < dim; ++x) {
            g(x) = std::polar(1.0 / dim, -kTwoPi * x * k / dim);
        }
        gammas[static_cast<std::size_t>(k)] = g;
    }
    return PolynomialState(dim, 0, std::move(gammas));
}

double bessel_i_scaled(int j, double x) {
    if (j < 0) raise(errc::invalid_argument, "order must be nonnegative");
    if (x < 0.0) raise(errc::invalid_argument, "argument must be nonnegative");
    if (x == 0.0) return j == 0 ? 1.0 : 0.0;

    const int start = std::max(j, static_cast<int>(std::ceil(x))) +
                      static_cast<int>(10.0 * std::sqrt(std::max(j, static_cast<int>(x)) + 1.0)) + 40;
    double next = 0.0;
    double current = 1e-280;
    double target = (j == start) ? current : 0.0;
    double norm = 0.0;
    for (int m = start; m >= 1; --m) {
        const double previous = next + (2.0 * m / x) * current;
        next = current;
        current = previous;
        if (m - 1 == j) target = current;
        norm += (m - 1 == 0) ? current : 2.0 * next;
        // The recurrence grows fast; renormalize before overflow.
        if (std::abs(current) > 1e260) {
            current *= 1e-260;
            next *= 1e-260;
            target *= 1e-260;
            norm *= 1e-260;
        }
    }
    return target / norm;
}

LaurentPolynomial build_sign_poly(double k, int n) {
    if (n < 1 || n % 2 == 0) raise(errc::invalid_argument, "degree must be odd and >= 1");
    if (k <= 0.0) raise(errc::invalid_argument, "steepness k must be positive");

    // Periodic trapezoid quadrature for the Fourier-sine coefficients of
    // -erf(k sin theta); exact for bandwidth below the sample count.
    const int samples = std::max(64, 8 * n);
    std::vector<double> values(static_cast<std::size_t>(samples));
    for (int t = 0; t < samples; ++t) {
        values[static_cast<std::size_t>(t)] = -std::erf(k * std::sin(kTwoPi * t / samples));
    }

    std::vector<cplx> coeffs(static_cast<std::size_t>(2 * n + 1), cplx(0.0, 0.0));
    for (int m = 1; m <= n; m += 2) {
        double b = 0.0;
        for (int t = 0; t < samples; ++t) {
            b += values[static_cast<std::size_t>(t)] * std::sin(kTwoPi * m * t / samples);
        }
        b *= 2.0 / samples;
        coeffs[static_cast<std::size_t>(n + m)] = cplx(0.0, -0.5 * b);
        coeffs[static_cast<std::size_t>(n - m)] = cplx(0.0, 0.5 * b);
    }
    return LaurentPolynomial(-n, std::move(coeffs));
}

SignPolyFit fit_sign_poly(double k, double eps) {
    if (eps <= 0.0) raise(errc::invalid_argument, "target error must be positive");
    int n = 2 * static_cast<int>(std::ceil(k)) + 1;
    SignPolyFit fit;
    while (true) {
        fit.poly = build_sign_poly(k, n);
        fit.degree = n;
        const int grid = 8 * n + 1;
        std::vector<double> thetas(static_cast<std::size_t>(grid));
        for (int t = 0; t < grid; ++t) thetas[static_cast<std::size_t>(t)] = kTwoPi * t / grid;
        const std::vector<cplx> values = kernels::eval_on_circle(fit.poly, thetas);
        double worst = 0.0;
        for (int t = 0; t < grid; ++t) {
            worst = std::max(worst, std::abs(values[static_cast<std::size_t>(t)] +
                                             cplx(std::erf(k * std::sin(thetas[static_cast<std::size_t>(t)])), 0.0)));
        }
        fit.max_error = worst;
        if (worst <= eps) return fit;
        if (n > 200000) {
            raise(errc::condition_not_met, "sign-wave degree doubling did not converge (n = " +
                                               std::to_string(n) + ", error " + std::to_string(worst) + ")");
        }
        n = 2 * n + 1;
    }
}

void ArcSpec::validate() const {
    if (arcs.empty()) raise(errc::arc_spec_invalid, "no arcs given");
    if (gap <= 0.0) raise(errc::arc_spec_invalid, "gap must be positive");
    int longer_than_pi = 0;
    for (const auto& [a, b] : arcs) {
        if (a < 0.0 || a >= kTwoPi) raise(errc::arc_spec_invalid, "arc start outside [0, 2pi)");
        if (b <= a || b - a >= kTwoPi) raise(errc::arc_spec_invalid, "arc length outside (0, 2pi)");
        if (b - a > std::numbers::pi) ++longer_than_pi;
    }
    if (longer_than_pi > 1) {
        raise(errc::arc_spec_invalid, "more than one arc covers over half the circle");
    }
    // Pairwise separation: order by start angle and look at adjacent gaps.
    std::vector<std::pair<double, double>> sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() == 1) {
        if (kTwoPi - (sorted[0].second - sorted[0].first) < gap) {
            raise(errc::arc_spec_invalid, "single arc leaves less than gap of free circle");
        }
        return;
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const auto& cur = sorted[i];
        const auto& nxt = sorted[(i + 1) % sorted.size()];
        // The next arc must start after the current one ends.
        if (wrap_angle(nxt.first - cur.first) < (cur.second - cur.first)) {
            raise(errc::arc_spec_invalid, "arcs overlap");
        }
        if (wrap_angle(nxt.first - cur.second) < gap) {
            raise(errc::arc_spec_invalid, "arcs closer than the declared gap");
        }
    }
}

int ArcSpec::locate(double theta, double margin) const {
    for (int j = 0; j < count(); ++j) {
        if (inside_arc(theta, arcs[static_cast<std::size_t>(j)].first,
                       arcs[static_cast<std::size_t>(j)].second, margin)) {
            return j;
        }
    }
    return -1;
}

PhaseLocationBuild build_phase_location_state(const ArcSpec& spec, double eps_prime) {
    spec.validate();
    if (eps_prime <= 0.0 || eps_prime >= 0.5) {
        raise(errc::invalid_argument, "eps_prime must lie in (0, 1/2)");
    }
    const int s = spec.count();
    const int dim = std::max(2, next_power_of_two(s));
    const double delta = eps_prime / 4.0;
    const double eps = eps_prime / (4.0 * s);

    PhaseLocationBuild build;

    // The largest arc is produced by completion; explicit windows only work
    // for arcs at most half the circle.
    int completed = 0;
    for (int j = 1; j < s; ++j) {
        if (spec.length(j) > spec.length(completed)) completed = j;
    }
    build.completed_arc = completed;

    std::vector<LaurentPolynomial> polys(static_cast<std::size_t>(dim));
    double scale = 1.0;
    int max_degree = 1;

    if (s > 1) {
        // Steepness: the erf flank must be eps/2-settled once gap/2 away
        // from a jump.
        const double flank = std::sin(std::min(spec.gap, std::numbers::pi) / 2.0);
        double k = 2.0;
        while (std::erfc(k * flank) > eps / 2.0) k += 1.0;
        SignPolyFit fit = fit_sign_poly(k, eps / 2.0);
        build.sign_wave_k = k;
        build.sign_degree = fit.degree;

        scale = std::sqrt(1.0 - delta) / ((1.0 + eps) * (1.0 + eps));
        const LaurentPolynomial half = LaurentPolynomial::constant(0.5);
        for (int j = 0; j < s; ++j) {
            if (j == completed) continue;
            const auto& [a, b] = spec.arcs[static_cast<std::size_t>(j)];
            // Rising edge at the arc start, falling edge at the arc end.
            const LaurentPolynomial rise = half + cplx(0.5, 0.0) * fit.poly.rotated(a - std::numbers::pi);
            const LaurentPolynomial fall = half + cplx(0.5, 0.0) * fit.poly.rotated(b);
            polys[static_cast<std::size_t>(j)] = rise * fall;
            max_degree = std::max(max_degree, polys[static_cast<std::size_t>(j)].max_exponent());
        }

        // Numerical guard on sum |P_j|^2 <= 1; shrink until it holds.
        const int grid = std::max(1024, 8 * max_degree + 1);
        std::vector<double> thetas(static_cast<std::size_t>(grid));
        for (int t = 0; t < grid; ++t) thetas[static_cast<std::size_t>(t)] = kTwoPi * t / grid;
        while (true) {
            std::vector<double> total(static_cast<std::size_t>(grid), 0.0);
            for (int j = 0; j < s; ++j) {
                if (j == completed) continue;
                const std::vector<cplx> vals = kernels::eval_on_circle(
                    cplx(scale, 0.0) * polys[static_cast<std::size_t>(j)], thetas);
                for (int t = 0; t < grid; ++t) {
                    total[static_cast<std::size_t>(t)] += std::norm(vals[static_cast<std::size_t>(t)]);
                }
            }
            if (*std::max_element(total.begin(), total.end()) <= 1.0) break;
            scale *= 0.999;
        }
        for (int j = 0; j < s; ++j) {
            if (j == completed) continue;
            polys[static_cast<std::size_t>(j)] = cplx(scale, 0.0) * polys[static_cast<std::size_t>(j)];
        }
    }

    // Completion fills the remaining arc (the whole circle when s = 1).
    std::vector<LaurentPolynomial> partial;
    for (int j = 0; j < s; ++j) {
        if (j != completed) partial.push_back(polys[static_cast<std::size_t>(j)]);
    }
    const int bound = std::max(1, 2 * build.sign_degree);
    CompletionResult completion = complete_state(partial, bound, 1e-8);
    build.report.rescale_applied = completion.rescale_applied;
    if (completion.rescale_applied != 1.0) {
        for (int j = 0; j < s; ++j) {
            if (j == completed) continue;
            polys[static_cast<std::size_t>(j)] =
                cplx(completion.rescale_applied, 0.0) * polys[static_cast<std::size_t>(j)];
        }
    }
    polys[static_cast<std::size_t>(completed)] = completion.polynomial;

    PolynomialState raw = PolynomialState::from_polynomials(polys);
    const ValidityReport validity = raw.validity(1e-6);
    if (!validity.valid) {
        raise(errc::completion_failed, "completed state invalid (max deviation " +
                                           std::to_string(validity.max_deviation) + ")");
    }

    // Dense-grid check of the per-arc guarantees. For the completed arc the
    // outside bound is meaningful only on the other arcs; in the neutral
    // zones its window may stay high.
    const double margin = spec.gap / 2.0;
    const int grid = std::max(2048, 8 * std::max(max_degree, raw.degree()) + 1);
    double grid_max_error = 0.0;
    for (int t = 0; t < grid; ++t) {
        const double theta = kTwoPi * t / grid;
        const VectorXcd amps = raw.evaluate(std::polar(1.0, theta));
        for (int j = 0; j < s; ++j) {
            const auto& [a, b] = spec.arcs[static_cast<std::size_t>(j)];
            const double weight = std::norm(amps(j));
            const bool in_shrunk = inside_arc(theta, a, b, margin);
            const bool in_expanded = inside_arc(theta, a - margin, b + margin, 0.0);
            if (in_shrunk) {
                grid_max_error = std::max(grid_max_error, 1.0 - weight);
            } else if (j != completed && !in_expanded) {
                grid_max_error = std::max(grid_max_error, weight);
            } else if (j == completed && spec.locate(theta, margin) >= 0 && spec.locate(theta, margin) != j) {
                grid_max_error = std::max(grid_max_error, weight);
            }
        }
    }
    build.report.grid_max_error = grid_max_error;
    if (grid_max_error > eps_prime) {
        raise(errc::completion_failed, "arc guarantee violated on the grid (worst deviation " +
                                           std::to_string(grid_max_error) + ")");
    }

    build.state = raw.shifted(-raw.min_power());
    return build;
}

GaussianWindowBuild build_gaussian_window_state(const GaussianWindowSpec& spec) {
    const int n = spec.n;
    if (n < 4 || n > 4096 || n % 2 != 0) raise(errc::invalid_argument, "N must be even and in [4, 4096]");
    if (spec.sigma <= 0.0) raise(errc::invalid_argument, "sigma must be positive");
    const double sigma = spec.sigma;

    auto phi = [&](double x) {
        return std::pow(2.0 * sigma * sigma / std::numbers::pi, 0.25) * std::exp(-sigma * sigma * x * x);
    };

    double k_squared = 0.0;
    for (int y = -n / 2; y < n / 2; ++y) k_squared += phi(y) * phi(y);
    const double window_norm = std::sqrt(k_squared);

    std::vector<VectorXcd> gammas(static_cast<std::size_t>(n));
    for (int y = -n / 2; y < n / 2; ++y) {
        VectorXcd g(n);
        const double amp = phi(y) / (window_norm * std::sqrt(static_cast<double>(n)));
        for (int k = 0; k < n; ++k) {
            g(k) = std::polar(amp, -kTwoPi * k * y / n);
        }
        gammas[static_cast<std::size_t>(y + n / 2)] = g;
    }

    GaussianWindowBuild build{PolynomialState(n, 0, std::move(gammas)), {}, window_norm};
    build.report.truncation_bound = sigma * std::exp(-0.5 * sigma * sigma * n * n);

    // Orthogonality defect of the coefficient Gram matrix, for the report.
    LaurentPolynomial gram = build.state.gram_poly();
    double defect = std::abs(gram.coeff(0) - cplx(1.0, 0.0));
    for (int m = 1; m <= gram.max_exponent(); ++m) defect = std::max(defect, std::abs(gram.coeff(m)));
    build.report.grid_max_error = defect;
    return build;
}

Eigen::MatrixXcd inverse_dft_matrix(int n) {
    MatrixXcd m(n, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int x = 0; x < n; ++x) {
        for (int k = 0; k < n; ++k) {
            m(x, k) = std::polar(norm, -kTwoPi * x * k / n);
        }
    }
    return m;
}

std::pair<Protocol, Protocol> build_discrete_log_protocols(int order) {
    if (order < 2 || order > 64) raise(errc::invalid_argument, "order must be in [2, 64]");
    VectorXcd uniform = VectorXcd::Constant(order, cplx(1.0, 0.0));
    UnitaryMatrix prepare = gram_schmidt_complete({{0, uniform}}, order);
    UnitaryMatrix idft(inverse_dft_matrix(order));
    Protocol protocol{SignalOperator::exponential_dim(order), {prepare, idft}};
    return {protocol, protocol};
}

} // namespace qsp
