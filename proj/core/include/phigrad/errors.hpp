#pragma once

#include <stdexcept>
#include <string>

namespace phigrad {

/// Thrown when delta_psi is requested at a zero of psi, where it diverges.
struct pole_error : std::domain_error {
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

/// Thrown by invert_flux when no bracket containing the target can be
/// established (the flux map is not onto, i.e. the degree lower bound
/// condition fails).
struct non_invertible_error : std::domain_error {
  explicit non_invertible_error(const std::string& what)
      : std::domain_error(what) {}
};

/// Thrown when an operation is asked to handle a family it has no pathway
/// for, or a family whose preconditions are violated.
struct unsupported_family_error : std::domain_error {
  explicit unsupported_family_error(const std::string& what)
      : std::domain_error(what) {}
};

/// Thrown when a numerical solve fails its accuracy audit or diverges.
struct solver_error : std::runtime_error {
  explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a documented precondition does not hold.
struct precondition_error : std::invalid_argument {
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace phigrad
