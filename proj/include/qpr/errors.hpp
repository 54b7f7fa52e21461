#pragma once

#include <stdexcept>
#include <string>

namespace qpr {

/// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs violate an operation's preconditions. The CLI maps these to exit 1.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain where the quantity is defined (|t| < 1 in a bound, t = 0, ...).
class DomainError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ZeroArgument : public DomainError {
 public:
  using DomainError::DomainError;
};

/// z on the principal-branch cut while z^{n+s} needs a non-integer power.
class BranchAmbiguity : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Operation defined only for one sign of the functional-equation parameter.
class WrongBranch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class UnsupportedRange : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A Laguerre-type family whose a_n does not match -(1 - q^{n+1}).
class InconsistentFamily : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class UnsupportedFamily : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A numerical cap was hit. The CLI maps these to exit 2.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class TermCapExceeded : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IndeterminateRatio : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace qpr
