#pragma once

#include <stdexcept>
#include <string>

namespace msing {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad file, unknown variable, invalid size).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An exact identity that must hold did not; indicates a bug or corrupt data.
class IdentityFailure : public Error {
 public:
  using Error::Error;
};

/// The requested computation is outside what the library can decide.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace msing
