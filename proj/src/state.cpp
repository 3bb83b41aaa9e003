#include "qsp/state.hpp"

#include <algorithm>
#include <cmath>

#include "qsp/errors.hpp"
#include "qsp/kernels.hpp"

namespace qsp {

PolynomialState::PolynomialState(int dim, int min_power, std::vector<Eigen::VectorXcd> gammas)
    : dim_(dim), min_power_(min_power), gammas_(std::move(gammas)) {
    if (dim_ <= 0) raise(errc::invalid_argument, "state dimension must be positive");
    for (const auto& g : gammas_) {
        if (g.size() != dim_) {
            raise(errc::dimension_mismatch, "coefficient vector length does not match state dimension");
        }
    }
    trim_zero_ends();
}

void PolynomialState::trim_zero_ends() {
    auto is_exact_zero = [](const Eigen::VectorXcd& v) { return v.isZero(0.0); };
    while (!gammas_.empty() && is_exact_zero(gammas_.back())) gammas_.pop_back();
    std::size_t first = 0;
    while (first < gammas_.size() && is_exact_zero(gammas_[first])) ++first;
    if (first > 0) {
        gammas_.erase(gammas_.begin(), gammas_.begin() + static_cast<std::ptrdiff_t>(first));
        min_power_ += static_cast<int>(first);
    }
    if (gammas_.empty()) min_power_ = 0;
}

PolynomialState PolynomialState::from_polynomials(const std::vector<LaurentPolynomial>& entries) {
    const int dim = static_cast<int>(entries.size());
    if (dim == 0) raise(errc::invalid_argument, "empty polynomial list");
    int lo = 0;
    int hi = -1;
    bool any = false;
    for (const auto& p : entries) {
        if (p.is_zero()) continue;
        lo = any ? std::min(lo, p.min_exponent()) : p.min_exponent();
        hi = any ? std::max(hi, p.max_exponent()) : p.max_exponent();
        any = true;
    }
    if (!any) return PolynomialState(dim, 0, {});
    std::vector<Eigen::VectorXcd> gammas(static_cast<std::size_t>(hi - lo + 1),
                                         Eigen::VectorXcd::Zero(dim));
    for (int x = 0; x < dim; ++x) {
        const auto& p = entries[static_cast<std::size_t>(x)];
        for (int k = p.min_exponent(); k <= p.max_exponent() && !p.is_zero(); ++k) {
            gammas[static_cast<std::size_t>(k - lo)](x) = p.coeff(k);
        }
    }
    return PolynomialState(dim, lo, std::move(gammas));
}

PolynomialState PolynomialState::basis_state(int dim, int index) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(index) = 1.0;
    return PolynomialState(dim, 0, {v});
}

Eigen::VectorXcd PolynomialState::gamma(int k) const {
    if (k < min_power_ || k > degree() || gammas_.empty()) return Eigen::VectorXcd::Zero(dim_);
    return gammas_[static_cast<std::size_t>(k - min_power_)];
}

LaurentPolynomial PolynomialState::component(int x) const {
    if (x < 0 || x >= dim_) raise(errc::range_exceeded, "component index out of range");
    std::vector<cplx> coeffs(gammas_.size());
    for (std::size_t i = 0; i < gammas_.size(); ++i) coeffs[i] = gammas_[i](x);
    return LaurentPolynomial(min_power_, std::move(coeffs));
}

Eigen::VectorXcd PolynomialState::evaluate(cplx z) const {
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(dim_);
    if (gammas_.empty()) return acc;
    for (auto it = gammas_.rbegin(); it != gammas_.rend(); ++it) {
        acc = z * acc + *it;
    }
    if (min_power_ != 0) {
        if (z == cplx(0.0, 0.0)) raise(errc::domain_error, "evaluation at z = 0 with nonzero min power");
        acc *= std::pow(z, min_power_);
    }
    return acc;
}

LaurentPolynomial PolynomialState::gram_poly() const {
    if (gammas_.empty()) return LaurentPolynomial::zero();
    const std::vector<cplx> overlaps = kernels::column_overlaps(gammas_);
    const int top = static_cast<int>(overlaps.size()) - 1;
    std::vector<cplx> coeffs(2 * overlaps.size() - 1);
    for (int m = 0; m <= top; ++m) {
        coeffs[static_cast<std::size_t>(top + m)] = overlaps[static_cast<std::size_t>(m)];
        coeffs[static_cast<std::size_t>(top - m)] = std::conj(overlaps[static_cast<std::size_t>(m)]);
    }
    return LaurentPolynomial(-top, std::move(coeffs));
}

ValidityReport PolynomialState::validity(double tol) const {
    if (tol <= 0.0) raise(errc::invalid_argument, "tolerance must be positive");
    LaurentPolynomial g = gram_poly();
    ValidityReport report;
    report.max_deviation = std::abs(g.coeff(0) - cplx(1.0, 0.0));
    report.worst_power = 0;
    if (!g.is_zero()) {
        for (int m = g.min_exponent(); m <= g.max_exponent(); ++m) {
            if (m == 0) continue;
            const double dev = std::abs(g.coeff(m));
            if (dev > report.max_deviation) {
                report.max_deviation = dev;
                report.worst_power = m;
            }
        }
    }
    report.valid = report.max_deviation <= tol;
    return report;
}

CoefficientMatrix PolynomialState::coefficient_matrix(int start_power) const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_, dim_);
    for (int c = 0; c < dim_; ++c) {
        m.col(c) = gamma(start_power + c);
    }
    return {std::move(m), start_power};
}

PolynomialState PolynomialState::apply_unitary(const Eigen::MatrixXcd& u) const {
    if (u.rows() != dim_ || u.cols() != dim_) {
        raise(errc::dimension_mismatch, "matrix does not match state dimension");
    }
    return PolynomialState(dim_, min_power_, kernels::apply_matrix_to_columns(u, gammas_));
}

PolynomialState PolynomialState::shifted(int shift) const {
    if (gammas_.empty()) return *this;
    return PolynomialState(dim_, min_power_ + shift, gammas_);
}

PolynomialState PolynomialState::trimmed(double tol) const {
    std::vector<Eigen::VectorXcd> out = gammas_;
    for (auto& g : out) {
        for (int x = 0; x < dim_; ++x) {
            if (std::abs(g(x)) <= tol) g(x) = 0.0;
        }
    }
    return PolynomialState(dim_, min_power_, std::move(out));
}

} // namespace qsp
