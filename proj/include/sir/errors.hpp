#pragma once

#include <stdexcept>

namespace sir {

// Common base so callers can catch the whole family at once.
struct SirError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamError : SirError {
  using SirError::SirError;
};
struct BoundsError : SirError {
  using SirError::SirError;
};
struct DegenerateError : SirError {
  using SirError::SirError;
};
struct MeasureNotQualified : SirError {
  using SirError::SirError;
};
struct BudgetExceeded : SirError {
  using SirError::SirError;
};
struct FormatError : SirError {
  using SirError::SirError;
};
struct SpecError : SirError {
  using SirError::SirError;
};

}  // namespace sir
