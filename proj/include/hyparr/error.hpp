#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyparr {

enum class ErrorCode {
    ZeroForm,
    DuplicateHyperplane,
    DimensionMismatch,
    IndexOutOfRange,
    NonzeroRemainder,
    FlatNotInLattice,
    EmptyMultiarrangement,
    NotADerivation,
    TheoremViolation,
    WrongRank,
    BadPrime,
    InconsistentCounts,
    InstanceTooLarge,
    ParseError,
    InternalInconsistency,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

    ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace hyparr
