#include "qsp/errors.hpp"

namespace qsp {

const char* errc_name(errc code) {
    switch (code) {
    case errc::domain_error: return "DomainError";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::invalid_state: return "InvalidState";
    case errc::degree_zero: return "DegreeZero";
    case errc::condition_not_met: return "ConditionNotMet";
    case errc::orthogonality_violated: return "OrthogonalityViolated";
    case errc::degree_too_high: return "DegreeTooHigh";
    case errc::parity_violated: return "ParityViolated";
    case errc::range_exceeded: return "RangeExceeded";
    case errc::not_nonnegative: return "NotNonnegative";
    case errc::unpaired_roots: return "UnpairedRoots";
    case errc::norm_exceeded: return "NormExceeded";
    case errc::arc_spec_invalid: return "ArcSpecInvalid";
    case errc::completion_failed: return "CompletionFailed";
    case errc::not_normalized: return "NotNormalized";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

} // namespace qsp
