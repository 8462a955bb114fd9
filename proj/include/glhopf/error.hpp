#pragma once

#include <stdexcept>
#include <string>

namespace glhopf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different fields (F_q contexts or cyclotomic primes).
class ContextError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class SingularError : public Error {
 public:
  using Error::Error;
};

// A cyclotomic value expected to be rational was not.
class NotRationalError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class DegeneracyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// An enumeration would scan more elements than the configured budget allows.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, unsigned long long required)
      : Error(what + " (requires a budget of " + std::to_string(required) + ")"),
        required_(required) {}

  unsigned long long required() const noexcept { return required_; }

 private:
  unsigned long long required_;
};

// A sum that must divide exactly did not.
class ExactnessError : public Error {
 public:
  using Error::Error;
};

}  // namespace glhopf
