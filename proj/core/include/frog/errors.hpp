#pragma once

#include <stdexcept>
#include <string>

namespace frog {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violations (modulus < 2, mismatched field contexts, ...).
struct DomainError : Error {
    using Error::Error;
};

struct DivisionByZero : DomainError {
    DivisionByZero() : DomainError("division by zero") {}
};

// Point/bytes decoding: wrong length, coordinate >= p, off-curve point.
struct DecodeError : Error {
    using Error::Error;
};

struct UnknownCurveError : Error {
    explicit UnknownCurveError(const std::string& name)
        : Error("unknown curve: " + name) {}
};

struct MalformedParamsError : Error {
    using Error::Error;
};

// Parameters parse but fail structural checks (G off curve, singular curve, ...).
struct StructuralValidationError : Error {
    using Error::Error;
};

// hippo container: bad magic/version/length/param-hash or point decode failure.
struct FormatError : Error {
    using Error::Error;
};

// hippo container: GCM tag verification failure.
struct AuthError : Error {
    using Error::Error;
};

struct DegenerateSharedSecret : Error {
    DegenerateSharedSecret() : Error("ECDH produced the identity point") {}
};

struct RngError : Error {
    using Error::Error;
};

}  // namespace frog
