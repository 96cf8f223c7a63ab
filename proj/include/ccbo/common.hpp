#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace ccbo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Caller handed us inconsistent arguments (dimension mismatch, empty set, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Bad configuration file or unsupported problem selection.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical routine left its validity envelope (non-PD matrix, overflow, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Request exceeds a configured resource cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ccbo
