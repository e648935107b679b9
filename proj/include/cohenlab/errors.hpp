#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cohenlab {

struct CohenError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// enumeration or encoding left the configured bounds
struct BoundExceeded : CohenError {
  using CohenError::CohenError;
};

// a value violates its type's invariants
struct MalformedCondition : CohenError {
  using CohenError::CohenError;
};

// lift called with q not extending the projected image
struct NotBelow : CohenError {
  using CohenError::CohenError;
};

// cohen_to_term input length is not a multiple of the poset size
struct LengthNotMultiple : CohenError {
  using CohenError::CohenError;
};

// a claimed-dense set admitted no extension within the truncation
struct NotDense : CohenError {
  std::size_t index;
  explicit NotDense(std::size_t i)
      : CohenError("dense set " + std::to_string(i) +
                   " has no extension within bounds"),
        index(i) {}
};

// an assembled stage filter missed one of its dense sets
struct StageFailure : CohenError {
  std::size_t stage;
  std::size_t dense_index;
  StageFailure(std::size_t s, std::size_t d)
      : CohenError("stage " + std::to_string(s) + " missed dense set " +
                   std::to_string(d)),
        stage(s),
        dense_index(d) {}
};

}  // namespace cohenlab
