#pragma once

#include <stdexcept>
#include <string>

namespace qsv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The minimal q-slice of a series is not a single monomial.
class NotAUnit : public Error {
 public:
  using Error::Error;
};

/// A root-of-unity substitution would need a fractional power of the sign.
class IllDefinedRootOfUnityPower : public Error {
 public:
  using Error::Error;
};

/// A comparison or extraction asked for more precision than a series carries.
class InsufficientTruncation : public Error {
 public:
  using Error::Error;
};

/// A geometric denominator vanishes identically.
class PoleAtSpecialization : public Error {
 public:
  using Error::Error;
};

/// 1/j(z) was needed but j(z) is not invertible.
class NonUnitPrefactor : public Error {
 public:
  using Error::Error;
};

/// A grid point makes some denominator non-invertible.
class DegenerateSpecialization : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class FormUnavailable : public Error {
 public:
  using Error::Error;
};

/// A lattice enumeration failed to close before the radius cap.
class NonTerminatingEnumeration : public Error {
 public:
  using Error::Error;
};

/// Character assembly could not certify that all Fourier modes were collected.
class MRangeBoundFailure : public Error {
 public:
  using Error::Error;
};

/// A normalized string function acquired a non-integral coefficient.
class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

/// Parameters outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace qsv
