#pragma once

#include <stdexcept>
#include <string>

namespace eip {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or representation shapes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Operands live over different fields or different (n, r) configurations.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A constructor or operation was called outside its parameter range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The requested operation is outside what the library implements.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; the message starts with "source:line:column" when known.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace eip
