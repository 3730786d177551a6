#pragma once

#include <stdexcept>
#include <string>

namespace skq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeError : Error {
    explicit NonPrimeError(unsigned long long p)
        : Error("not a prime: " + std::to_string(p)) {}
};

struct SizeExceededError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero in finite field") {}
};

struct FieldMismatchError : Error {
    FieldMismatchError() : Error("operands belong to different fields") {}
};

struct OddnessViolationError : Error {
    using Error::Error;
};

struct NotBipartiteError : Error {
    using Error::Error;
};

struct NotRealError : Error {
    NotRealError() : Error("cyclotomic value is not real") {}
};

struct HypothesisViolatedError : Error {
    using Error::Error;
};

struct DisconnectedError : Error {
    DisconnectedError() : Error("graph is disconnected") {}
};

struct SpecMismatchError : Error {
    using Error::Error;
};

struct InvalidSpecError : Error {
    using Error::Error;
};

}  // namespace skq
