#pragma once

#include <stdexcept>
#include <string>

namespace clustertilt {

// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// uplus / sign_eps on a pair whose orbit data says it is not an exchange pair.
class NotExchangeable : public Error {
 public:
  using Error::Error;
};

// A quiver or search left simply-laced finite type.
class NotFiniteType : public Error {
 public:
  using Error::Error;
};

// A configurable enumeration cap was hit before closure.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A structural statement that must hold in finite type was violated (e.g.
// more than two shortest paths for an arrow). Reported, never truncated.
class StructuralViolation : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed. Signals a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace clustertilt
