#pragma once

#include <stdexcept>
#include <string>

namespace pdual {

/// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in different algebras.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

/// A value violates the structural invariant of the type it was meant to become.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class RefinementError : public Error {
 public:
  using Error::Error;
};

class SubcompletenessError : public Error {
 public:
  using Error::Error;
};

/// The candidate fails the Boolean partition algebra condition.
class ValidityError : public Error {
 public:
  using Error::Error;
};

class CoherenceError : public Error {
 public:
  using Error::Error;
};

class NotAnFUltrafilter : public Error {
 public:
  using Error::Error;
};

class StabilityError : public Error {
 public:
  using Error::Error;
};

class NotAPartitionHom : public Error {
 public:
  using Error::Error;
};

class UniformContinuityError : public Error {
 public:
  using Error::Error;
};

class DepthOverflow : public Error {
 public:
  using Error::Error;
};

/// A request outside what can be materialized (e.g. more than 16 atoms).
class CapacityError : public Error {
 public:
  using Error::Error;
};

class MisuseError : public Error {
 public:
  using Error::Error;
};

/// A record is malformed or describes an ill-formed object.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A computed object failed a check that the theory guarantees. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace pdual
