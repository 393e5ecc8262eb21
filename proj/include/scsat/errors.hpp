#pragma once

#include <stdexcept>
#include <string>

namespace scsat {

/// An input object violates a structural assumption (arity mismatch,
/// non-monotone transfer function, negative diffusion coefficient, ...).
class ModelError : public std::runtime_error {
  public:
    explicit ModelError(const std::string &what) : std::runtime_error(what) {}
};

/// A computation failed numerically (no bracketing, non-finite value,
/// solver divergence).
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace scsat
