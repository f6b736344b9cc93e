#pragma once

#include <stdexcept>
#include <string>

namespace recurpart {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input or a violated precondition. CLI exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An iteration that did not settle. CLI exit code 3.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

#define RECURPART_ERROR(Name, Base)   \
  class Name : public Base {          \
   public:                            \
    using Base::Base;                 \
  };

RECURPART_ERROR(PrecisionTooLow, ValidationError)
RECURPART_ERROR(NoDominantRoot, ValidationError)
RECURPART_ERROR(NotIncreasing, ValidationError)
RECURPART_ERROR(FirstTermNotOne, ValidationError)
RECURPART_ERROR(ReducibleCharPoly, ValidationError)
RECURPART_ERROR(CapacityExceeded, ValidationError)
RECURPART_ERROR(OracleTooLarge, ValidationError)
RECURPART_ERROR(LogOfZero, ValidationError)
RECURPART_ERROR(PoleAtNonpositiveInteger, ValidationError)
RECURPART_ERROR(PoleAtOne, ValidationError)
RECURPART_ERROR(NegativeArgument, ValidationError)
RECURPART_ERROR(TooSmall, ValidationError)
RECURPART_ERROR(AbscissaViolation, ValidationError)
RECURPART_ERROR(DomainError, ValidationError)
RECURPART_ERROR(NoConvergence, NumericFailure)
RECURPART_ERROR(BracketFailure, NumericFailure)

#undef RECURPART_ERROR

}  // namespace recurpart
