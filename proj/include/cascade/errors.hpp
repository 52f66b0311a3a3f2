#pragma once

#include <stdexcept>
#include <string>

namespace cascade {

// Configuration problems (bad file, unknown key, invalid value). CLI exit 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failures during a computation. CLI exit 3.
class ComputeError : public std::runtime_error {
 public:
  explicit ComputeError(const std::string& msg) : std::runtime_error(msg) {}
};

// ODE integrator failure; carries the time reached.
class IntegrationError : public ComputeError {
 public:
  IntegrationError(const std::string& msg, double t_reached)
      : ComputeError(msg), t_reached_(t_reached) {}
  double t_reached() const { return t_reached_; }

 private:
  double t_reached_;
};

}  // namespace cascade
