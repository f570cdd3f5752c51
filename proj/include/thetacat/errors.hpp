#pragma once

#include <stdexcept>
#include <string>

namespace thetacat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidObject : Error {
  using Error::Error;
};

struct InvalidMorphism : Error {
  using Error::Error;
};

struct CompositionError : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

// A cell or map was used outside the level (or window) where it lives.
struct DomainError : Error {
  using Error::Error;
};

struct ConstructionError : Error {
  using Error::Error;
};

// Raised by truncation/connectivity on inputs whose Segal maps are not
// bijections. Weak inputs would need a fibrant replacement, which this
// library does not provide.
struct NotStrict : Error {
  using Error::Error;
};

}  // namespace thetacat
