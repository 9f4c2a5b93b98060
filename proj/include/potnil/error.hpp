#ifndef POTNIL_ERROR_HPP
#define POTNIL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace potnil {

enum class ErrorCode {
    InvalidArgument,
    SpecMismatch,
    ZeroInverse,
    DivisionByZeroPoly,
    NotMonic,
    DimensionMismatch,
    Singular,
    PrefixTooLong,
    BadPrefixLength,
    NonzeroTrace,
    CriterionFailed,
    BlockCriterionFailed,
    BudgetExceeded,
    NotFound,
    ParseError,
    Internal,
};

const char* to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code is what
/// the C API surfaces; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the companion decomposer when the trace is outside the prime
/// subfield. Carries the trace in canonical text form.
class CriterionFailed : public Error {
public:
    explicit CriterionFailed(std::string trace);

    const std::string& trace() const noexcept { return trace_; }

private:
    std::string trace_;
};

/// Raised by the whole-matrix pipeline when one Frobenius block fails the
/// trace criterion. This is a failure of the method, not a proof that no
/// decomposition of the input exists.
class BlockCriterionFailed : public Error {
public:
    BlockCriterionFailed(std::size_t block_index, std::string block_trace);

    std::size_t block_index() const noexcept { return block_index_; }
    const std::string& block_trace() const noexcept { return block_trace_; }

private:
    std::size_t block_index_;
    std::string block_trace_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& detail);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace potnil

#endif  // POTNIL_ERROR_HPP
