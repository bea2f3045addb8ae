#pragma once

#include <stdexcept>
#include <string>

namespace twc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotIrreducible : Error { using Error::Error; };
struct NotPrimitive : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct ZeroArgument : Error { using Error::Error; };
struct UnsupportedCharacteristic : Error { using Error::Error; };
struct SubfieldViolation : Error { using Error::Error; };
struct CosetsOverlap : Error { using Error::Error; };
struct ConditionViolated : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct NonIntegerResult : Error { using Error::Error; };
struct BadDecimation : Error { using Error::Error; };
struct BadParameters : Error { using Error::Error; };
struct BadGcd : Error { using Error::Error; };
struct NotANonsquare : Error { using Error::Error; };
struct BadCongruence : Error { using Error::Error; };
struct BadCosetSize : Error { using Error::Error; };
struct ProjectionFailure : Error { using Error::Error; };
struct ExtensionConstructionFailure : Error { using Error::Error; };
struct NonIntegerCorrelation : Error { using Error::Error; };

}  // namespace twc
