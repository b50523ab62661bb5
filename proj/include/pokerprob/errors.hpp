#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pokerprob {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed card text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's precondition (duplicate cards, bad sizes...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Exact enumeration requested for a street it does not support.
class UnsupportedStage : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A dataset CSV row that cannot be decoded.
class MalformedRow : public Error {
 public:
  MalformedRow(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Model file decoding errors.
class ModelFormatError : public Error {
 public:
  using Error::Error;
};

class BadMagic : public ModelFormatError {
 public:
  using ModelFormatError::ModelFormatError;
};

class UnsupportedVersion : public ModelFormatError {
 public:
  using ModelFormatError::ModelFormatError;
};

class TruncatedModel : public ModelFormatError {
 public:
  using ModelFormatError::ModelFormatError;
};

}  // namespace pokerprob
