#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypertile {

enum class ErrorCode
{
    OutOfRange,
    DegenerateTriple,
    DuplicateEdge,
    UnlabelledVertex,
    TooSmall,
    BadModulus,
    BadL,
    IncompleteOrientation,
    BudgetExhausted,
    TooLarge,
    InvalidTiling,
    SamplingBudgetZero,
    DegreeTooLow,
    NotAPartition,
    Overlap,
    BadSize,
    SampleCountZero,
    NoAbsorberLeft,
    ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hypertile
