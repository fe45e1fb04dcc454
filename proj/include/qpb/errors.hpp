#pragma once

#include <stdexcept>
#include <string>

namespace qpb {

// Input outside the mathematical domain of an operation (non-positive
// argument to log_q, spectrum beyond the exp_q bound, non-PD matrix, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Parameters outside the regime an operation supports (wrong (q,r) for a
// theorem case, exponent outside an integral-representation window, ...).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A numerical routine could not reach the requested accuracy.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double est_error)
      : std::runtime_error(what), est_error_(est_error) {}
  double est_error() const { return est_error_; }

 private:
  double est_error_;
};

// Malformed run configuration or CLI usage; maps to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace qpb
