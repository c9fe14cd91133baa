#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamming_radio {

enum class Errc {
    EmptySpec,
    InvalidFactor,
    NonIncreasingFactors,
    Overflow,
    DimensionMismatch,
    ShapeError,
    RepetitionError,
    ColumnOutOfRange,
    PermutationSizeMismatch,
    InvalidPermutation,
    RangeError,
    NotAtBoundary,
    TooLarge,
    SizeMismatch,
    InvalidMembership,
    NotInA_n,
    InvalidInstructionSet,
    BudgetExceeded,
    StructureError,
    UnsupportedN,
    InvalidConfig,
    ParseError,
};

constexpr std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::EmptySpec: return "EmptySpec";
    case Errc::InvalidFactor: return "InvalidFactor";
    case Errc::NonIncreasingFactors: return "NonIncreasingFactors";
    case Errc::Overflow: return "Overflow";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ShapeError: return "ShapeError";
    case Errc::RepetitionError: return "RepetitionError";
    case Errc::ColumnOutOfRange: return "ColumnOutOfRange";
    case Errc::PermutationSizeMismatch: return "PermutationSizeMismatch";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::RangeError: return "RangeError";
    case Errc::NotAtBoundary: return "NotAtBoundary";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::InvalidMembership: return "InvalidMembership";
    case Errc::NotInA_n: return "NotInA_n";
    case Errc::InvalidInstructionSet: return "InvalidInstructionSet";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::StructureError: return "StructureError";
    case Errc::UnsupportedN: return "UnsupportedN";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace hamming_radio
