#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclex {

/// Failure categories reported through cyclex::Error.  Every precondition
/// that the library checks maps to exactly one code so callers (and the
/// command-line harness) can branch on them without parsing messages.
enum class ErrorCode {
    // graph6 codec
    MalformedHeader,
    LongFormUnsupported,
    InvalidCharacter,
    LengthMismatch,
    TrailingBitsNonzero,
    UnsupportedSize,
    // graph construction
    TooManyVertices,
    VertexOutOfRange,
    SelfLoop,
    InvalidParameter,
    // invariants / fragments
    EmptyGraph,
    CompleteGraph,
    Disconnected,
    // searches
    NoPath,
    SearchCapExceeded,
    BudgetExhausted,
    Cancelled,
    // schemes
    GuardViolated,
    InvalidScheme,
    TrivialScheme,
    // path systems
    NotSpecialCase,
    NoValidSystem,
    // statements
    UnknownStatement,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cyclex
