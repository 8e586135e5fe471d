#pragma once

#include <stdexcept>
#include <string>

namespace mskw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: a non-group table, out-of-range indices, bad JSON shape.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold (wrong relation type, bad set).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds an enumeration or size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed, or a construction that must
/// exist was not found. Always an implementation bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace mskw
