#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cag {

enum class Errc {
    ParseError,
    SelfLoop,
    EmptyInput,
    UnknownVertex,
    BlockedEndpoint,
    InvalidPEO,
    NotChordal,
    NotALeaf,
    NoPrivateVertex,
    NotNearlyChordal,
    NoObstructionFound,
    UnknownFamily,
    QuadrupleIsBQ,
    UniversalVertex,
    Star0Violation,
    HasBlockingQuadruple,
    AlphaTooLarge,
    ProofViolation,
    MalformedRep,
    RejectLimitExceeded,
    UnknownSuite,
};

inline std::string_view errc_name(Errc e) {
    switch (e) {
    case Errc::ParseError: return "ParseError";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::BlockedEndpoint: return "BlockedEndpoint";
    case Errc::InvalidPEO: return "InvalidPEO";
    case Errc::NotChordal: return "NotChordal";
    case Errc::NotALeaf: return "NotALeaf";
    case Errc::NoPrivateVertex: return "NoPrivateVertex";
    case Errc::NotNearlyChordal: return "NotNearlyChordal";
    case Errc::NoObstructionFound: return "NoObstructionFound";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::QuadrupleIsBQ: return "QuadrupleIsBQ";
    case Errc::UniversalVertex: return "UniversalVertex";
    case Errc::Star0Violation: return "Star0Violation";
    case Errc::HasBlockingQuadruple: return "HasBlockingQuadruple";
    case Errc::AlphaTooLarge: return "AlphaTooLarge";
    case Errc::ProofViolation: return "ProofViolation";
    case Errc::MalformedRep: return "MalformedRep";
    case Errc::RejectLimitExceeded: return "RejectLimitExceeded";
    case Errc::UnknownSuite: return "UnknownSuite";
    }
    return "Unknown";
}

/// Library error. `code()` identifies the failure; `what()` carries detail.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace cag
