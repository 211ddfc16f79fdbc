#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wham {

enum class ErrorKind {
    // map construction
    DanglingDart,
    LoopEdge,
    Disconnected,
    NonSphere,
    Bridge,
    // resolution
    NoSuchVertex,
    DegreeTooLow,
    IncompleteCorrespondence,
    // factors / mutation
    NotCubic,
    NotTwoRegular,
    OddCycle,
    SelectionLengthMismatch,
    // coloring
    NotCoveringPair,
    ImproperColoring,
    ParityInconsistency,
    // moduli
    MissingThirdVertex,
    EdgeInTwoCliques,
    OverlapTooLarge,
    UnknownClique,
    TooLarge,
    // io
    ParseError,
    BadHeader,
    TruncatedRecord,
    UnknownGenerator,
    BadParameter,
};

std::string_view error_kind_name(ErrorKind kind);

/// All library failures are reported as Error; kind() distinguishes them and
/// the CLI serializes it into the machine-readable error channel.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace wham
