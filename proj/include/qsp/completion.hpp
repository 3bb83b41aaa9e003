#ifndef QSP_COMPLETION_HPP
#define QSP_COMPLETION_HPP

#include <vector>

#include "qsp/laurent.hpp"

namespace qsp {

/// Fejer-Riesz factor of a trigonometric polynomial R that is nonnegative on
/// the unit circle: an analytic polynomial w with |w(z)|^2 = R(z) there.
/// Roots of z^m R(z) come from balanced companion-matrix eigenvalues, are
/// paired (r, 1/conj(r)) keeping the member inside the disk, and circle
/// roots are split evenly across their even-multiplicity clusters. The
/// leading coefficient of w is made real nonnegative.
LaurentPolynomial fejer_riesz_factor(const LaurentPolynomial& r, double tol);

struct CompletionResult {
    LaurentPolynomial polynomial;
    /// Amplitude factor the inputs were scaled by before factorization
    /// (1.0 when untouched). Callers assembling the full state must apply
    /// the same factor to their polynomials.
    double rescale_applied = 1.0;
};

/// Completing polynomial P for a partial family with sum_x |P_x|^2 <= 1 on
/// the circle: |P|^2 = 1 - sum_x |P_x|^2, with exponents within [-degree_bound,
/// degree_bound]. Families that exceed 1 by more than tol raise NormExceeded;
/// dips below zero within tol are absorbed by rescaling the inputs.
CompletionResult complete_state(const std::vector<LaurentPolynomial>& partial, int degree_bound,
                                double tol);

} // namespace qsp

#endif
