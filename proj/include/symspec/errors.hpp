#pragma once

#include <stdexcept>
#include <string>

#include "symspec/gaussian.hpp"

namespace symspec {

/// An exact algebraic precondition failed; carries the offending residual.
class ConstraintViolation : public std::runtime_error {
 public:
  ConstraintViolation(const std::string& what, GaussianRational residual)
      : std::runtime_error(what + " (residual " + residual.str() + ")"),
        residual_(std::move(residual)) {}

  const GaussianRational& residual() const { return residual_; }

 private:
  GaussianRational residual_;
};

}  // namespace symspec
