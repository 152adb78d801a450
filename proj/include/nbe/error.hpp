#pragma once

#include <stdexcept>
#include <string>

namespace nbe {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A presentation whose rewriting does not terminate or whose relation table
/// is inconsistent with its declared generators.
class MalformedPresentation : public Error {
 public:
  using Error::Error;
};

/// A symplectic form that is not skew-symmetric or is degenerate.
class InvalidForm : public Error {
 public:
  using Error::Error;
};

/// Structure constants, modules or ideals that violate the algebra axioms
/// they claim (associativity, unit laws, closure).
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class FiltrationIncompatible : public Error {
 public:
  using Error::Error;
};

/// Raised when a result that must exist mathematically was not produced.
/// Reaching one of these means a kernel bug, not bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// An enumeration or resolution would exceed its documented budget.
class TooLarge : public Error {
 public:
  using Error::Error;
};

class IncompleteSearch : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace nbe
