#include "potnil/error.hpp"

#include <string>
#include <utility>

namespace potnil {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::SpecMismatch: return "SpecMismatch";
        case ErrorCode::ZeroInverse: return "ZeroInverse";
        case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::PrefixTooLong: return "PrefixTooLong";
        case ErrorCode::BadPrefixLength: return "BadPrefixLength";
        case ErrorCode::NonzeroTrace: return "NonzeroTrace";
        case ErrorCode::CriterionFailed: return "CriterionFailed";
        case ErrorCode::BlockCriterionFailed: return "BlockCriterionFailed";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

CriterionFailed::CriterionFailed(std::string trace)
    : Error(ErrorCode::CriterionFailed,
            "trace " + trace + " is not an integer multiple of unity; no p-potent + nilpotent decomposition exists"),
      trace_(std::move(trace)) {}

BlockCriterionFailed::BlockCriterionFailed(std::size_t block_index, std::string block_trace)
    : Error(ErrorCode::BlockCriterionFailed,
            "Frobenius block " + std::to_string(block_index) + " has trace " + block_trace +
                " outside the prime subfield; existence of a decomposition for the input matrix remains "
                "undecided by this method"),
      block_index_(block_index),
      block_trace_(std::move(block_trace)) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& detail)
    : Error(ErrorCode::ParseError,
            "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail),
      line_(line),
      column_(column) {}

}  // namespace potnil
