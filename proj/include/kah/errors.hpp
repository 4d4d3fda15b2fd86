#pragma once

#include <stdexcept>
#include <string>

namespace kah {

// A matrix failed a group-membership or law check.
class MembershipError : public std::runtime_error {
 public:
  MembershipError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Degenerate numerics: unexpected nullspace dimension, failed normalization, etc.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kah
