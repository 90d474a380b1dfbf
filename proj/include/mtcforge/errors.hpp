#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace mtcforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  NumericError(const std::string& what, int iterations)
      : Error(what + " (after " + std::to_string(iterations) + " sweeps)"), iterations_(iterations) {}
  int iterations() const { return iterations_; }

 private:
  int iterations_;
};

// Verlinde output that is not a valid fusion ring.
class NotModularError : public Error {
 public:
  NotModularError(const std::string& what, std::array<int, 3> worst, double deviation)
      : Error(what), worst_(worst), deviation_(deviation) {}
  std::array<int, 3> worst() const { return worst_; }
  double deviation() const { return deviation_; }

 private:
  std::array<int, 3> worst_;
  double deviation_;
};

class NotUnitaryModularError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDataError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

// Singular blocks, zero dagger coefficients and similar corrupted input.
class DataError : public Error {
 public:
  using Error::Error;
};

class FinitenessError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& path, const std::string& what)
      : Error("parse error at " + path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class ValidationError : public Error {
 public:
  ValidationError(const std::string& invariant, const std::string& what)
      : Error("validation error [" + invariant + "]: " + what), invariant_(invariant) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace mtcforge
