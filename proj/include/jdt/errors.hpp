#pragma once

#include <stdexcept>
#include <string>

namespace jdt {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed something outside an operation's precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

// A file or text stream does not follow the expected layout.
class FormatError : public Error {
 public:
  using Error::Error;
};

// File parsed but carries a schema version this build cannot read.
class UnsupportedVersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

// A geographic query fell outside the region the atlas covers.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// A request would exceed a configured work budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace jdt
