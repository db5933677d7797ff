#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace apv {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression source.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownIdentifierError : public ParseError {
 public:
  UnknownIdentifierError(std::size_t offset, std::string name);

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Evaluation failed at a specific point (division by zero).
class EvalError : public Error {
 public:
  EvalError(std::complex<double> z, std::string subexpression);

  std::complex<double> point() const noexcept { return point_; }
  const std::string& subexpression() const noexcept { return subexpression_; }

 private:
  std::complex<double> point_;
  std::string subexpression_;
};

/// Arguments outside an operation's domain: invalid spec, eps out of range,
/// a path that misses its required endpoints, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A path, circle or series radius conflicts with the declared poles.
class RegionError : public DomainError {
 public:
  RegionError(const std::string& what, std::complex<double> pole)
      : DomainError(what), pole_(pole) {}

  std::complex<double> pole() const noexcept { return pole_; }

 private:
  std::complex<double> pole_;
};

/// Path side does not match what the caller asked for.
class SideError : public DomainError {
 public:
  using DomainError::DomainError;
};

std::string format_complex(std::complex<double> z);

}  // namespace apv
