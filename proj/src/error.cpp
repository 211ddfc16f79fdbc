#include "wham/error.hpp"

namespace wham {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DanglingDart: return "DanglingDart";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NonSphere: return "NonSphere";
    case ErrorKind::Bridge: return "Bridge";
    case ErrorKind::NoSuchVertex: return "NoSuchVertex";
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::IncompleteCorrespondence: return "IncompleteCorrespondence";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::NotTwoRegular: return "NotTwoRegular";
    case ErrorKind::OddCycle: return "OddCycle";
    case ErrorKind::SelectionLengthMismatch: return "SelectionLengthMismatch";
    case ErrorKind::NotCoveringPair: return "NotCoveringPair";
    case ErrorKind::ImproperColoring: return "ImproperColoring";
    case ErrorKind::ParityInconsistency: return "ParityInconsistency";
    case ErrorKind::MissingThirdVertex: return "MissingThirdVertex";
    case ErrorKind::EdgeInTwoCliques: return "EdgeInTwoCliques";
    case ErrorKind::OverlapTooLarge: return "OverlapTooLarge";
    case ErrorKind::UnknownClique: return "UnknownClique";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BadHeader: return "BadHeader";
    case ErrorKind::TruncatedRecord: return "TruncatedRecord";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::BadParameter: return "BadParameter";
    }
    return "UnknownError";
}

} // namespace wham
