#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algcurv {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematical failures: poles, singular points, non-invertible series.
// The CLI maps these to exit code 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed user input. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

#define ALGCURV_DEFINE_ERROR(Name, Base) \
  class Name : public Base {             \
   public:                               \
    using Base::Base;                    \
  }

// algebra
ALGCURV_DEFINE_ERROR(AlphabetMismatch, Error);
ALGCURV_DEFINE_ERROR(UnknownVariable, InputError);
ALGCURV_DEFINE_ERROR(DivisionByZero, DomainError);
ALGCURV_DEFINE_ERROR(PoleError, DomainError);
ALGCURV_DEFINE_ERROR(IndeterminateError, DomainError);

// series
ALGCURV_DEFINE_ERROR(NonUnitDivisor, DomainError);
ALGCURV_DEFINE_ERROR(CompositionBasepoint, DomainError);
ALGCURV_DEFINE_ERROR(NotReversible, DomainError);
ALGCURV_DEFINE_ERROR(UnboundVariable, DomainError);
ALGCURV_DEFINE_ERROR(TruncationError, DomainError);

// diffield
ALGCURV_DEFINE_ERROR(IndeterminateSubstitution, DomainError);
ALGCURV_DEFINE_ERROR(NotAnInvariant, DomainError);
ALGCURV_DEFINE_ERROR(DepthLimitExceeded, DomainError);

// curvature / branch
ALGCURV_DEFINE_ERROR(SingularOrBadChart, DomainError);
ALGCURV_DEFINE_ERROR(ZeroJacobianDeterminant, DomainError);
ALGCURV_DEFINE_ERROR(CurvaturePole, DomainError);
ALGCURV_DEFINE_ERROR(BasePointMismatch, DomainError);
ALGCURV_DEFINE_ERROR(PointNotOnCurve, DomainError);

// dalg
ALGCURV_DEFINE_ERROR(InsufficientOrder, DomainError);
ALGCURV_DEFINE_ERROR(DuplicatePoint, DomainError);

// parsing
ALGCURV_DEFINE_ERROR(JetIndexOverflow, InputError);

#undef ALGCURV_DEFINE_ERROR

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& message, std::size_t offset)
      : InputError("syntax error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace algcurv
