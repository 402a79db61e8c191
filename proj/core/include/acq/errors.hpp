#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

class WordMismatch : public Error {
 public:
  using Error::Error;
};

class SemisimplicityFailure : public Error {
 public:
  using Error::Error;
};

class NonInvertibleRank : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// Raised when a computation would exceed the configured size limit.
class EvaluationGuard : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public EvaluationGuard {
 public:
  using EvaluationGuard::EvaluationGuard;
};

class ZeroExponent : public Error {
 public:
  ZeroExponent() : Error("exponent must be nonzero") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class IllegalDestabilize : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownGenerator : public ParseError {
 public:
  UnknownGenerator(const std::string& name, std::size_t position)
      : ParseError("unknown generator '" + name + "'", position), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace acq
