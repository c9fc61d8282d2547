#pragma once

#include <stdexcept>
#include <string>

namespace ybe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or space tags do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (rationals, files, tensor expressions).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Catalog lookup or name resolution failed.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace ybe
