#pragma once

#include <stdexcept>
#include <string>

namespace lieaid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed files, unknown names, invalid field specs.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Operands that do not fit together (field mismatch, dimension mismatch).
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic failure such as inverting zero.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace lieaid
