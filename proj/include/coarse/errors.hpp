#pragma once

#include <stdexcept>
#include <string>

namespace coarse {

/// Malformed or invalid user input (unknown label, symmetric pair, bad flag).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was invoked on a choice-set domain it cannot analyse.
class UnsupportedDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its documented size bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coarse
