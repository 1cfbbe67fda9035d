#pragma once

#include <stdexcept>
#include <string>

namespace syz {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HomogeneityError : public Error {
 public:
  using Error::Error;
};

class DegenerateRingError : public Error {
 public:
  using Error::Error;
};

class RingMismatchError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotAComplexError : public Error {
 public:
  using Error::Error;
};

class UnsupportedGradingError : public Error {
 public:
  using Error::Error;
};

class ZeroModuleError : public Error {
 public:
  using Error::Error;
};

class TrivialFactorError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised by the text-format reader; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace syz
