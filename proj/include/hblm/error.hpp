#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hblm {

enum class ErrorCode {
    NotPrime,
    ReducibleMinPoly,
    UnsupportedCombination,
    InvalidSpec,
    LevelMismatch,
    NotAUnit,
    WildRamification,
    NonCommutingFamily,
    NotInvariant,
    NotAPoint,
    BadType,
    NotInChart,
    BudgetExceeded,
    UnknownCheck,
    ParseError,
    DimensionMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status and callers can match on it in tests.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleMinPoly: return "ReducibleMinPoly";
    case ErrorCode::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::WildRamification: return "WildRamification";
    case ErrorCode::NonCommutingFamily: return "NonCommutingFamily";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotAPoint: return "NotAPoint";
    case ErrorCode::BadType: return "BadType";
    case ErrorCode::NotInChart: return "NotInChart";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    }
    return "Unknown";
}

}  // namespace hblm
