#include "hyparr/error.hpp"

namespace hyparr {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ZeroForm: return "ZeroForm";
        case ErrorCode::DuplicateHyperplane: return "DuplicateHyperplane";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NonzeroRemainder: return "NonzeroRemainder";
        case ErrorCode::FlatNotInLattice: return "FlatNotInLattice";
        case ErrorCode::EmptyMultiarrangement: return "EmptyMultiarrangement";
        case ErrorCode::NotADerivation: return "NotADerivation";
        case ErrorCode::TheoremViolation: return "TheoremViolation";
        case ErrorCode::WrongRank: return "WrongRank";
        case ErrorCode::BadPrime: return "BadPrime";
        case ErrorCode::InconsistentCounts: return "InconsistentCounts";
        case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

}  // namespace hyparr
