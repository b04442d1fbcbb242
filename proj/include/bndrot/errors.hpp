#pragma once

#include <stdexcept>
#include <string>

namespace bndrot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series division, logarithm or real power hit a constant term with
/// modulus at or below the configured threshold.
class DivisionBySmallConstant : public Error {
 public:
  using Error::Error;
};

/// Composition requires the inner series to have a zero constant term.
class NonzeroInnerConstant : public Error {
 public:
  using Error::Error;
};

class InvalidMeasure : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class NotCaratheodory : public Error {
 public:
  using Error::Error;
};

}  // namespace bndrot
