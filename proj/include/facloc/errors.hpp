#ifndef FACLOC_ERRORS_HPP
#define FACLOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace facloc {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct EmptyInstanceError : Error {
    EmptyInstanceError() : Error("instance must contain at least one agent") {}
};

struct EmptyListError : Error {
    EmptyListError() : Error("median of an empty list") {}
};

struct OutOfRangeError : Error {
    explicit OutOfRangeError(const std::string& what) : Error(what) {}
};

struct InvalidBandError : Error {
    explicit InvalidBandError(const std::string& what) : Error(what) {}
};

struct PhantomCountMismatchError : Error {
    explicit PhantomCountMismatchError(const std::string& what) : Error(what) {}
};

struct InvalidGammaError : Error {
    InvalidGammaError() : Error("gamma must lie in [0, 1/2]") {}
};

struct InvalidDeltaError : Error {
    InvalidDeltaError() : Error("delta must lie in [0, 1/2]") {}
};

struct InvalidLambdaError : Error {
    InvalidLambdaError() : Error("lambda must lie in [0, 1/4]") {}
};

struct InvalidThetaError : Error {
    InvalidThetaError() : Error("theta must lie in [0, 1/2]") {}
};

struct UnknownFamilyError : Error {
    explicit UnknownFamilyError(const std::string& what) : Error(what) {}
};

struct InvalidCaseError : Error {
    explicit InvalidCaseError(const std::string& what) : Error(what) {}
};

} // namespace facloc

#endif
