#pragma once

#include <stdexcept>
#include <string>

namespace wappell {

// An internal consistency condition failed; indicates a bug in this library,
// not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Independently computed construction routes produced different polynomials.
struct RouteMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A theorem-backed equality failed when evaluated exactly.
struct TheoremViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wappell
