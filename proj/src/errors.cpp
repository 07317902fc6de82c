#include "seaorder/errors.hpp"

namespace seaorder {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
        case ErrorCode::NotOrdered: return "NotOrdered";
        case ErrorCode::NotTailEquivalent: return "NotTailEquivalent";
        case ErrorCode::NoPeriodDetected: return "NoPeriodDetected";
        case ErrorCode::SelectorAmbiguous: return "SelectorAmbiguous";
        case ErrorCode::NotInCylinderU: return "NotInCylinderU";
        case ErrorCode::WindowTooSmall: return "WindowTooSmall";
        case ErrorCode::InfiniteDifference: return "InfiniteDifference";
        case ErrorCode::UnknownElement: return "UnknownElement";
        case ErrorCode::ValidationFailed: return "ValidationFailed";
        case ErrorCode::Incompatible: return "Incompatible";
        case ErrorCode::CoarseSelector: return "CoarseSelector";
        case ErrorCode::AlreadyAssigned: return "AlreadyAssigned";
        case ErrorCode::InconsistentComparator: return "InconsistentComparator";
        case ErrorCode::EmptyCut: return "EmptyCut";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace seaorder
