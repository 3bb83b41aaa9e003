#include "qsp/laurent.hpp"

#include <algorithm>
#include <cmath>

#include "qsp/errors.hpp"
#include "qsp/kernels.hpp"

namespace qsp {

LaurentPolynomial::LaurentPolynomial(int min_exponent, std::vector<cplx> coefficients)
    : min_exponent_(min_exponent), coefficients_(std::move(coefficients)) {
    trim_exact();
}

LaurentPolynomial LaurentPolynomial::constant(cplx value) {
    return LaurentPolynomial(0, {value});
}

LaurentPolynomial LaurentPolynomial::monomial(cplx value, int exponent) {
    return LaurentPolynomial(exponent, {value});
}

void LaurentPolynomial::trim_exact() {
    std::size_t last = coefficients_.size();
    while (last > 0 && coefficients_[last - 1] == cplx(0.0, 0.0)) --last;
    coefficients_.resize(last);
    std::size_t first = 0;
    while (first < coefficients_.size() && coefficients_[first] == cplx(0.0, 0.0)) ++first;
    if (first > 0) {
        coefficients_.erase(coefficients_.begin(),
                            coefficients_.begin() + static_cast<std::ptrdiff_t>(first));
        min_exponent_ += static_cast<int>(first);
    }
    if (coefficients_.empty()) min_exponent_ = 0;
}

cplx LaurentPolynomial::coeff(int k) const {
    if (is_zero() || k < min_exponent_ || k > max_exponent()) return 0.0;
    return coefficients_[static_cast<std::size_t>(k - min_exponent_)];
}

double LaurentPolynomial::max_coeff_norm() const {
    double m = 0.0;
    for (const cplx& c : coefficients_) m = std::max(m, std::abs(c));
    return m;
}

cplx LaurentPolynomial::eval(cplx z) const {
    if (is_zero()) return 0.0;
    if (z == cplx(0.0, 0.0) && min_exponent_ < 0) {
        raise(errc::domain_error, "evaluation at z = 0 with negative exponents");
    }
    cplx acc = 0.0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * z + *it;
    }
    if (min_exponent_ == 0) return acc;
    return acc * std::pow(z, min_exponent_);
}

LaurentPolynomial LaurentPolynomial::conj_reflect() const {
    std::vector<cplx> out(coefficients_.size());
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        out[out.size() - 1 - i] = std::conj(coefficients_[i]);
    }
    return LaurentPolynomial(-max_exponent(), std::move(out));
}

LaurentPolynomial LaurentPolynomial::rotated(double phase) const {
    std::vector<cplx> out(coefficients_.size());
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        const int k = min_exponent_ + static_cast<int>(i);
        out[i] = coefficients_[i] * std::polar(1.0, -phase * k);
    }
    return LaurentPolynomial(min_exponent_, std::move(out));
}

LaurentPolynomial LaurentPolynomial::shifted(int shift) const {
    if (is_zero()) return {};
    return LaurentPolynomial(min_exponent_ + shift, coefficients_);
}

LaurentPolynomial LaurentPolynomial::trimmed(double tol) const {
    std::vector<cplx> out = coefficients_;
    for (cplx& c : out) {
        if (std::abs(c) <= tol) c = 0.0;
    }
    return LaurentPolynomial(min_exponent_, std::move(out));
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    std::vector<cplx> out = coefficients_;
    for (cplx& c : out) c = -c;
    return LaurentPolynomial(min_exponent_, std::move(out));
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) {
        *this = rhs;
        return *this;
    }
    const int lo = std::min(min_exponent_, rhs.min_exponent_);
    const int hi = std::max(max_exponent(), rhs.max_exponent());
    std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        out[static_cast<std::size_t>(min_exponent_ - lo) + i] += coefficients_[i];
    }
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
        out[static_cast<std::size_t>(rhs.min_exponent_ - lo) + i] += rhs.coefficients_[i];
    }
    *this = LaurentPolynomial(lo, std::move(out));
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
    *this += -rhs;
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    return LaurentPolynomial(lhs.min_exponent_ + rhs.min_exponent_,
                             kernels::convolve(lhs.coefficients_, rhs.coefficients_));
}

LaurentPolynomial operator*(cplx scalar, const LaurentPolynomial& p) {
    std::vector<cplx> out = p.coefficients_;
    for (cplx& c : out) c *= scalar;
    return LaurentPolynomial(p.min_exponent_, std::move(out));
}

} // namespace qsp
