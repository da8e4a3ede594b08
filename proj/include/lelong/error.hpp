#pragma once

#include <stdexcept>
#include <string>

namespace lelong {

enum class ErrorKind {
  Domain,
  DegenerateNormalization,
  EmptyLeaf,
  Normalization,
  InvalidSpec,
  UnsupportedCurrent,
  Precondition,
  QuadratureFailure,
  Input,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when adaptive subdivision hits max_depth before meeting tolerance.
class QuadratureFailure : public Error {
 public:
  QuadratureFailure(const std::string& message, double best_estimate, double error_estimate)
      : Error(ErrorKind::QuadratureFailure, message),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

}  // namespace lelong
