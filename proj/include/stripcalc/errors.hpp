#pragma once

#include <stdexcept>

namespace stripcalc {

/// Base class for every failure the library reports.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidGrid : Error { using Error::Error; };

// Boundary values too large; spectral operations would alias.
struct NonDecayingInput : Error { using Error::Error; };

struct BadBandIndex : Error { using Error::Error; };
struct UnstableShift : Error { using Error::Error; };
struct SupportViolation : Error { using Error::Error; };
struct QuadratureDivergence : Error { using Error::Error; };
struct UnstableConjugation : Error { using Error::Error; };
struct BadExponent : Error { using Error::Error; };
struct DomainViolation : Error { using Error::Error; };
struct BadRadius : Error { using Error::Error; };
struct ZeroDrift : Error { using Error::Error; };
struct Overflow : Error { using Error::Error; };

}  // namespace stripcalc
