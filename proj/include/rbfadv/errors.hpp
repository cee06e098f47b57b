#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbfadv {

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

class SingularSystemError : public Error {
 public:
  using Error::Error;
};

class DegenerateCentersError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class StabilityParameterError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class CorrectionError : public Error {
 public:
  CorrectionError(const std::string& what, double cond) : Error(what), cond_(cond) {}
  double cond() const { return cond_; }

 private:
  double cond_;
};

// Non-finite state during time stepping. `stage` is 1..3.
class BlowUpError : public Error {
 public:
  BlowUpError(double t, int stage, std::size_t step)
      : Error("blow-up at t=" + std::to_string(t) + " stage=" + std::to_string(stage) +
              " step=" + std::to_string(step)),
        t_(t),
        stage_(stage),
        step_(step) {}
  double t() const { return t_; }
  int stage() const { return stage_; }
  std::size_t step() const { return step_; }

 private:
  double t_;
  int stage_;
  std::size_t step_;
};

}  // namespace rbfadv
