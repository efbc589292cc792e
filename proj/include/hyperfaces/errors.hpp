#pragma once

#include <stdexcept>

namespace hyperfaces {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct SumMismatch : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct UnsupportedN : Error { using Error::Error; };
struct UnsupportedShape : Error { using Error::Error; };
struct UnsupportedBeta : Error { using Error::Error; };
struct BadN : Error { using Error::Error; };
struct BadP : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct NonIntegerResult : Error { using Error::Error; };
struct NonIntegralGenus : Error { using Error::Error; };
struct MixedParity : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };

}  // namespace hyperfaces
