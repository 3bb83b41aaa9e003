#ifndef QSP_DECOMPOSE_HPP
#define QSP_DECOMPOSE_HPP

#include <utility>
#include <vector>

#include "qsp/linalg.hpp"
#include "qsp/state.hpp"

namespace qsp {

/// z-dependent diagonal unitary diag(z^d0, ..., z^d{D-1}), encoded by its
/// integer exponent vector. Rejects operators that are a global phase
/// (all exponents equal) or smaller than 2x2.
class SignalOperator {
  public:
    explicit SignalOperator(std::vector<int> exponents);

    /// diag(1,...,1,z,...,z) with split_zeros ones.
    static SignalOperator single_step(int dim, int split_zeros);
    /// diag(1, z, z^2, ..., z^{2^b - 1}).
    static SignalOperator exponential(int bits);
    /// General modulus variant: diag(1, z, ..., z^{dim-1}).
    static SignalOperator exponential_dim(int dim);
    /// diag(z^-1,...,z^-1,z,...,z) with split_zeros entries of z^-1.
    static SignalOperator laurent_single(int dim, int split_zeros);
    /// diag(z^-(2^b-1), z^-(2^b-3), ..., z^(2^b-1)), step 2.
    static SignalOperator laurent_exponential(int bits);

    int dim() const { return static_cast<int>(exponents_.size()); }
    const std::vector<int>& exponents() const { return exponents_; }
    int exponent(int row) const { return exponents_[static_cast<std::size_t>(row)]; }

    bool operator==(const SignalOperator& other) const { return exponents_ == other.exponents_; }

  private:
    std::vector<int> exponents_;
};

/// Ordered product A_n w A_{n-1} w ... w A_0 acting on |0>, stored with A_0
/// first and the signal operator w interleaved between consecutive unitaries.
struct Protocol {
    SignalOperator signal;
    std::vector<UnitaryMatrix> unitaries;

    int dim() const { return signal.dim(); }
    int steps() const { return static_cast<int>(unitaries.size()) - 1; }
};

/// Row x of the state gets every power lowered by the row's exponent
/// (the action of w^dag on a polynomial state).
PolynomialState apply_signal_adjoint(const PolynomialState& s, const SignalOperator& op);

/// Forward action of w: row x powers raised by the row's exponent.
PolynomialState apply_signal(const PolynomialState& s, const SignalOperator& op);

/// One degree-lowering step under a single-step signal operator: returns the
/// step unitary A and the reduced state with degree exactly one lower.
/// The construction places the normalized top coefficient vector on an
/// exponent-1 column of A and the normalized bottom one on an exponent-0
/// column; validity of s guarantees they are orthogonal.
std::pair<UnitaryMatrix, PolynomialState> linear_reduce(const PolynomialState& s,
                                                        const SignalOperator& op);

/// One step under the exponential operator, lowering the degree by 2^b - 1.
/// Requires Gamma_0^dag Gamma_{n-(2^b-1)} lower triangular; reports the
/// worst strict-upper magnitude otherwise.
std::pair<UnitaryMatrix, PolynomialState> exponential_reduce(const PolynomialState& s, int bits,
                                                             double tol = 1e-8);

/// Full synthesis over single_step(dim, split_zeros): exactly degree+1
/// unitaries.
Protocol decompose_linear(const PolynomialState& s, int split_zeros);

/// Length-1 synthesis over the exponential operator, for states with
/// pairwise orthogonal coefficient vectors: A_1 holds the normalized
/// coefficient vectors as columns, A_0 prepares the vector of their norms.
Protocol decompose_one_step(const PolynomialState& s, int bits, double tol = 1e-8);

/// Analytic state t with s(z) = z^{-n_steps} t(z^2) entrywise. Requires all
/// powers of s within [-n_steps, n_steps] and of parity n_steps mod 2.
PolynomialState laurent_to_analytic(const PolynomialState& s, int n_steps);

/// Synthesis over laurent_single: converts to the analytic picture,
/// decomposes, and re-tags the signal operator.
Protocol decompose_laurent(const PolynomialState& s, int split_zeros);

} // namespace qsp

#endif
