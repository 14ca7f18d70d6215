#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hompois {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text, bad rational literals, unknown document fields.
struct parse_error : error {
  using error::error;
};

// Tensor/matrix dimensions do not agree.
struct shape_error : error {
  using error::error;
};

// A map that must be invertible is not (twist, gram matrix, operator twist).
struct singular_error : error {
  using error::error;
};

// A map required to be an algebra morphism is not; carries the basis pair
// at which multiplicativity first fails.
struct morphism_error : error {
  morphism_error(const std::string& what, std::size_t i, std::size_t j)
      : error(what), i(i), j(j) {}
  std::size_t i;
  std::size_t j;
};

// A checked precondition of a constructor failed (e.g. building the induced
// structure from a map that is not an operator of the representation).
struct precondition_error : error {
  using error::error;
};

// A coproduct part violates the required (anti)symmetry.
struct symmetry_error : error {
  using error::error;
};

// Unknown invariance mode.
struct mode_error : error {
  using error::error;
};

// Two routes that must agree disagreed; indicates a kernel defect.
struct internal_error : error {
  using error::error;
};

}  // namespace hompois
