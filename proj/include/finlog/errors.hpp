#pragma once

#include <stdexcept>
#include <string>

namespace finlog {

struct ArithError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInvertible : ArithError {
    using ArithError::ArithError;
};

struct DivisionByZero : ArithError {
    using ArithError::ArithError;
};

// Guard digits cannot cover the requested reduction.
struct PrecisionExhausted : ArithError {
    using ArithError::ArithError;
};

// Reducing a quantity that is not p-integral; usually a wrong congruence.
struct NegativeValuation : ArithError {
    using ArithError::ArithError;
};

struct DomainMismatch : ArithError {
    using ArithError::ArithError;
};

struct IndexOutOfRange : ArithError {
    using ArithError::ArithError;
};

struct PrimeConditionViolated : ArithError {
    using ArithError::ArithError;
};

struct UnknownCase : ArithError {
    using ArithError::ArithError;
};

}  // namespace finlog
