#pragma once

#include <stdexcept>
#include <string>

namespace latchroma {

enum class ErrorCode {
    RankDeficient,
    NotRational,
    UnknownName,
    BadDimension,
    SingularSublattice,
    DimensionMismatch,
    DimensionCapExceeded,
    TooManyVertices,
    LoopInQuotient,
    ImproperInput,
    InapplicableDimension,
    RhoHypothesisFails,
    SumNotZero,
    NotABasis,
    PositiveInnerProduct,
    DisconnectedInput,
    NoCycle,
    BadInput,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

} // namespace latchroma
