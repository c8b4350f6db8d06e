#pragma once

#include <stdexcept>
#include <string>

namespace kmin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownSymbolError : public Error {
 public:
  explicit UnknownSymbolError(const std::string& symbol)
      : Error("unknown symbol '" + symbol + "'"), symbol_(symbol) {}
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

/// Raised when a structure does not meet the input contract of an operation
/// (not total, bad references, unreachable states where forbidden).
class InvalidStructureError : public Error {
 public:
  using Error::Error;
};

class NotACongruenceError : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatchError : public Error {
 public:
  using Error::Error;
};

class LabelWidthMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace kmin
