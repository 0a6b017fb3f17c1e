#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace hypmetric {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point lies outside the domain it is evaluated in.
class DomainViolation : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A radius lies outside the open interval on which a formula is proved.
class OutOfValidity : public Error {
 public:
  OutOfValidity(const std::string& what, double lo, double hi)
      : Error(format(what, lo, hi)), lo_(lo), hi_(hi) {}

  double lower() const noexcept { return lo_; }
  double upper() const noexcept { return hi_; }

 private:
  static std::string format(const std::string& what, double lo, double hi) {
    std::ostringstream os;
    os.precision(12);
    os << what << ": r must lie in (" << lo << ", " << hi << ")";
    return os.str();
  }

  double lo_;
  double hi_;
};

/// No closed form exists for the requested metric/domain pair.
class UnsupportedClosedForm : public Error {
 public:
  using Error::Error;
};

/// Boundary sampling is not justified for the requested ball.
class RegimeError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypmetric
