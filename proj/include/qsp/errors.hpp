#ifndef QSP_ERRORS_HPP
#define QSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsp {

enum class errc {
    domain_error,
    dimension_mismatch,
    degenerate_input,
    precondition_violated,
    invalid_state,
    degree_zero,
    condition_not_met,
    orthogonality_violated,
    degree_too_high,
    parity_violated,
    range_exceeded,
    not_nonnegative,
    unpaired_roots,
    norm_exceeded,
    arc_spec_invalid,
    completion_failed,
    not_normalized,
    invalid_argument,
    parse_error,
};

const char* errc_name(errc code);

/// All library failures are reported through this exception type; code()
/// identifies the contract that was violated.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace qsp

#endif
