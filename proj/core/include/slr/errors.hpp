#pragma once

#include <stdexcept>
#include <string>

namespace slr {

// Error taxonomy: validation errors are caller mistakes (bad shapes, bad
// values, violated preconditions); numerical errors are data conditions the
// math cannot absorb (overflow ranges, constant predictors).
enum class ErrorKind { validation, numerical };

class Error : public std::runtime_error {
public:
    Error(std::string code, ErrorKind kind, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)), kind_(kind) {}

    const std::string& code() const noexcept { return code_; }
    ErrorKind kind() const noexcept { return kind_; }

private:
    std::string code_;
    ErrorKind kind_;
};

#define SLR_DEFINE_ERROR(NAME, KIND)                         \
    class NAME : public Error {                              \
    public:                                                  \
        explicit NAME(const std::string& msg)                \
            : Error(#NAME, ErrorKind::KIND, msg) {}          \
    }

SLR_DEFINE_ERROR(ZeroEntry, validation);
SLR_DEFINE_ERROR(TooShort, validation);
SLR_DEFINE_ERROR(Overflow, numerical);
SLR_DEFINE_ERROR(IndexOutOfRange, validation);
SLR_DEFINE_ERROR(SubsetTooSmall, validation);
SLR_DEFINE_ERROR(OneClassOnly, validation);
SLR_DEFINE_ERROR(MTooSmall, validation);
SLR_DEFINE_ERROR(ConstantBalance, numerical);
SLR_DEFINE_ERROR(DimensionMismatch, validation);
SLR_DEFINE_ERROR(KTooLarge, validation);
SLR_DEFINE_ERROR(PTooLarge, validation);
SLR_DEFINE_ERROR(LengthMismatch, validation);
SLR_DEFINE_ERROR(BadArgument, validation);

#undef SLR_DEFINE_ERROR

}  // namespace slr
