#pragma once

#include <stdexcept>
#include <string>

namespace jointslab {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing elements of different fields, or an invalid characteristic.
struct FieldError : Error {
    using Error::Error;
};

// Division by zero in exact arithmetic.
struct DivisionByZeroError : Error {
    using Error::Error;
};

// Operation not defined for the field's characteristic (e.g. p-th roots in
// characteristic zero).
struct UnsupportedError : Error {
    using Error::Error;
};

// Zero directions, dimension mismatches, ambient dimension below 3.
struct GeometryError : Error {
    using Error::Error;
};

// Polynomial lacks the shape an operation requires (e.g. an exponent not
// divisible by p when taking a p-th root).
struct StructureError : Error {
    using Error::Error;
};

// A caller-side precondition failed, or a certified inequality did not hold.
struct ContractError : Error {
    using Error::Error;
};

// Exact enumeration would exceed the configured incidence cap.
struct CapExceededError : Error {
    using Error::Error;
};

// Generator parameters outside the representable range of the field.
struct RangeError : Error {
    using Error::Error;
};

// Rejection sampling failed to produce a valid configuration within its cap.
struct GenerationError : Error {
    using Error::Error;
};

// Malformed input file or string.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace jointslab
