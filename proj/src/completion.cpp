#include "qsp/completion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "qsp/errors.hpp"

namespace qsp {

namespace {

using Eigen::MatrixXcd;

constexpr double kCircleBand = 1e-7;     // ||r| - 1| below this counts as a circle root
constexpr double kPairingTol = 1e-6;     // relative tolerance for (r, 1/conj(r)) matching

// Parlett-Reinsch style balancing with powers of two; companion matrices of
// polynomials with wide coefficient ranges need it before the QR iteration.
void balance_in_place(MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            double row_norm = 0.0;
            double col_norm = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                row_norm += std::abs(m(i, j));
                col_norm += std::abs(m(j, i));
            }
            if (row_norm == 0.0 || col_norm == 0.0) continue;
            double factor = 1.0;
            const double s = row_norm + col_norm;
            while (col_norm < row_norm / 2.0) {
                factor *= 2.0;
                col_norm *= 4.0;
            }
            while (col_norm > row_norm * 2.0) {
                factor /= 2.0;
                col_norm /= 4.0;
            }
            if (factor != 1.0 && (row_norm / factor + col_norm * factor) < 0.95 * s) {
                m.row(i) /= factor;
                m.col(i) *= factor;
                changed = true;
            }
        }
    }
}

std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs) {
    const int degree = static_cast<int>(coeffs.size()) - 1;
    MatrixXcd companion = MatrixXcd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < degree; ++i) {
        companion(i, degree - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs.back();
    }
    balance_in_place(companion);
    Eigen::ComplexEigenSolver<MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        raise(errc::unpaired_roots, "companion eigenvalue iteration failed to converge");
    }
    std::vector<cplx> roots(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return roots;
}

std::vector<cplx> expand_monic(const std::vector<cplx>& roots) {
    std::vector<cplx> coeffs{1.0};
    for (const cplx& r : roots) {
        std::vector<cplx> next(coeffs.size() + 1, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= r * coeffs[i];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

void sort_deterministic(std::vector<cplx>& v) {
    std::sort(v.begin(), v.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

} // namespace

LaurentPolynomial fejer_riesz_factor(const LaurentPolynomial& r_in, double tol) {
    if (tol <= 0.0) raise(errc::invalid_argument, "tolerance must be positive");

    // Enforce exact Hermitian symmetry (the input may carry roundoff), after
    // checking the input was Hermitian to begin with.
    for (int m = 0; m <= std::max(std::abs(r_in.min_exponent()), std::abs(r_in.max_exponent())); ++m) {
        if (std::abs(r_in.coeff(m) - std::conj(r_in.coeff(-m))) > tol * std::max(1.0, r_in.max_coeff_norm())) {
            raise(errc::invalid_argument, "input is not Hermitian-symmetric within tolerance");
        }
    }
    LaurentPolynomial r = cplx(0.5, 0.0) * (r_in + r_in.conj_reflect());
    r = r.trimmed((1e-14 + 1e-3 * tol) * std::max(1.0, r.max_coeff_norm()));

    const double scale = std::max(1.0, r.max_coeff_norm());
    const int half_width = r.is_zero() ? 0 : std::max(std::abs(r.min_exponent()), r.max_exponent());

    // Nonnegativity on the sample grid.
    const int grid = 4 * std::max(1, half_width) + 1;
    double min_value = std::numeric_limits<double>::infinity();
    for (int t = 0; t < grid; ++t) {
        const double theta = 2.0 * std::numbers::pi * t / grid;
        min_value = std::min(min_value, r.eval(std::polar(1.0, theta)).real());
    }
    if (min_value < -tol * scale) {
        raise(errc::not_nonnegative,
              "R dips to " + std::to_string(min_value) + " on the sample grid");
    }

    if (r.is_zero()) return LaurentPolynomial::zero();
    if (half_width == 0) {
        return LaurentPolynomial::constant(std::sqrt(std::max(0.0, r.coeff(0).real())));
    }

    // Roots of the analytic lift z^m R(z).
    std::vector<cplx> lifted(static_cast<std::size_t>(2 * half_width + 1));
    for (int k = -half_width; k <= half_width; ++k) {
        lifted[static_cast<std::size_t>(k + half_width)] = r.coeff(k);
    }
    std::vector<cplx> roots = polynomial_roots(lifted);

    std::vector<cplx> inside;
    std::vector<cplx> outside;
    std::vector<cplx> on_circle;
    for (const cplx& root : roots) {
        const double dist = std::abs(std::abs(root) - 1.0);
        if (dist <= kCircleBand) {
            on_circle.push_back(root);
        } else if (std::abs(root) < 1.0) {
            inside.push_back(root);
        } else {
            outside.push_back(root);
        }
    }
    sort_deterministic(inside);
    sort_deterministic(outside);
    sort_deterministic(on_circle);

    std::vector<cplx> kept = inside;

    // Pair inside roots with their reflections outside; every inside root
    // must consume exactly one outside root.
    if (inside.size() != outside.size()) {
        raise(errc::unpaired_roots, "inside/outside root counts differ (" +
                                        std::to_string(inside.size()) + " vs " +
                                        std::to_string(outside.size()) + ")");
    }
    std::vector<bool> used(outside.size(), false);
    double worst_pairing = 0.0;
    for (const cplx& root : inside) {
        const cplx mirror = 1.0 / std::conj(root);
        int best = -1;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < outside.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(outside[j] - mirror);
            if (d < best_dist) {
                best_dist = d;
                best = static_cast<int>(j);
            }
        }
        const double allowed = kPairingTol * std::max(1.0, std::abs(mirror));
        worst_pairing = std::max(worst_pairing, best_dist);
        if (best < 0 || best_dist > allowed) {
            raise(errc::unpaired_roots,
                  "no reflection partner within tolerance (worst residual " +
                      std::to_string(worst_pairing) + ")");
        }
        used[static_cast<std::size_t>(best)] = true;
    }

    // Circle roots carry even multiplicity; cluster near-identical ones and
    // keep half of each cluster.
    std::size_t i = 0;
    while (i < on_circle.size()) {
        std::size_t j = i + 1;
        while (j < on_circle.size() && std::abs(on_circle[j] - on_circle[i]) <= 10.0 * kPairingTol) {
            ++j;
        }
        const std::size_t count = j - i;
        if (count % 2 != 0) {
            raise(errc::unpaired_roots, "circle root cluster of odd multiplicity " +
                                            std::to_string(count));
        }
        for (std::size_t c = 0; c < count / 2; ++c) kept.push_back(on_circle[i + c]);
        i = j;
    }

    if (static_cast<int>(kept.size()) != half_width) {
        raise(errc::unpaired_roots, "kept " + std::to_string(kept.size()) + " roots, expected " +
                                        std::to_string(half_width));
    }

    // w = c * prod (z - root); |c|^2 matches the zero coefficient of R, and
    // c itself is real nonnegative, which also fixes the leading coefficient
    // of the monic product to a real nonnegative value.
    LaurentPolynomial monic(0, expand_monic(kept));
    LaurentPolynomial gram = monic.conj_reflect() * monic;
    const double g0 = gram.coeff(0).real();
    const double r0 = std::max(0.0, r.coeff(0).real());
    if (g0 <= 0.0) raise(errc::unpaired_roots, "degenerate factor normalization");
    return cplx(std::sqrt(r0 / g0), 0.0) * monic;
}

CompletionResult complete_state(const std::vector<LaurentPolynomial>& partial, int degree_bound,
                                double tol) {
    if (tol <= 0.0) raise(errc::invalid_argument, "tolerance must be positive");
    if (degree_bound < 0) raise(errc::invalid_argument, "degree bound must be nonnegative");
    for (const auto& p : partial) {
        if (p.is_zero()) continue;
        if (p.min_exponent() < -degree_bound || p.max_exponent() > degree_bound) {
            raise(errc::range_exceeded, "input polynomial exceeds the degree bound");
        }
    }

    auto squared_sum = [&](double factor) {
        LaurentPolynomial sum;
        for (const auto& p : partial) {
            const LaurentPolynomial q = cplx(factor, 0.0) * p;
            sum += q.conj_reflect() * q;
        }
        return sum;
    };

    LaurentPolynomial remainder = LaurentPolynomial::constant(1.0) - squared_sum(1.0);
    const int half_width =
        remainder.is_zero() ? 0 : std::max(std::abs(remainder.min_exponent()), remainder.max_exponent());
    const int grid = 8 * std::max(1, half_width) + 1;
    double min_value = std::numeric_limits<double>::infinity();
    double worst_theta = 0.0;
    for (int t = 0; t < grid; ++t) {
        const double theta = 2.0 * std::numbers::pi * t / grid;
        const double value = remainder.eval(std::polar(1.0, theta)).real();
        if (value < min_value) {
            min_value = value;
            worst_theta = theta;
        }
    }
    if (min_value < -tol) {
        raise(errc::norm_exceeded, "sum of squared magnitudes reaches " +
                                       std::to_string(1.0 - min_value) + " at theta " +
                                       std::to_string(worst_theta));
    }

    CompletionResult result;
    if (min_value < -1e-12) {
        // Genuinely over-full family (still within tol): pull the inputs in
        // before factorization and record the rescale. Roundoff-level dips
        // are left to the factorization, which absorbs them.
        result.rescale_applied = std::sqrt(1.0 - 2.0 * tol);
        remainder = LaurentPolynomial::constant(1.0) - squared_sum(result.rescale_applied);
    }

    const LaurentPolynomial w = fejer_riesz_factor(remainder, tol);
    result.polynomial = w.is_zero() ? w : w.shifted(-(w.max_exponent() / 2));
    return result;
}

} // namespace qsp
