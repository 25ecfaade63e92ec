#ifndef PLAP_ERRORS_HPP
#define PLAP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plap {

// Each error class maps onto one CLI exit code (see cli.hpp).

/// Invalid parameters: bad grid spec, p out of range, inconsistent flags.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller misuse: mismatched lengths, too few points for a fit.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematical precondition violated (p <= d where p > d is required, I <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input data unsuitable for the requested computation.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// NaN or overflow inside an iteration.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace plap

#endif  // PLAP_ERRORS_HPP
