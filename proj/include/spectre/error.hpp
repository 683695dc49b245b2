// Error taxonomy shared by every module.  Each failure mode gets a stable
// code so callers (tests, CLI) can branch on *what* went wrong instead of
// string-matching messages.
#pragma once

#include <stdexcept>
#include <string>

namespace spectre {

enum class errc {
    // input validation
    empty_support,
    negative_coordinate,
    duplicate_point,
    not_convenient,
    dimension_unsupported,
    invalid_char_sequence,
    not_single_pair,
    out_of_domain,
    parse_error,
    // invariant violations (bugs or impossible states, never bad input)
    internal_cancellation,
    non_integer_result,
    pole_at_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_support: return "EmptySupport";
        case errc::negative_coordinate: return "NegativeCoordinate";
        case errc::duplicate_point: return "DuplicatePoint";
        case errc::not_convenient: return "NotConvenient";
        case errc::dimension_unsupported: return "DimensionUnsupported";
        case errc::invalid_char_sequence: return "InvalidCharSequence";
        case errc::not_single_pair: return "NotSinglePair";
        case errc::out_of_domain: return "OutOfDomain";
        case errc::parse_error: return "ParseError";
        case errc::internal_cancellation: return "InternalCancellationFailure";
        case errc::non_integer_result: return "NonIntegerResult";
        case errc::pole_at_argument: return "PoleAtArgument";
    }
    return "UnknownError";
}

// True for conditions caused by bad user input (CLI exit code 2); false for
// violated internal invariants (CLI exit code 1).
inline bool errc_is_input(errc c) {
    switch (c) {
        case errc::internal_cancellation:
        case errc::non_integer_result:
            return false;
        default:
            return true;
    }
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace spectre
