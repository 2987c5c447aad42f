#pragma once

#include <stdexcept>
#include <string>

namespace hgf {

/// Operands live on different charts or have incompatible form degrees.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Operands carry values in incompatible Lie algebras or structure data.
struct AlgebraError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A generalized-form operation was given the wrong type N, value profile,
/// derivative context, or group element shape.
struct ProfileError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed scenario, model or form description.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace hgf
