#pragma once

#include <stdexcept>
#include <string>

namespace ceona {

// Malformed or out-of-range inputs: bad operands, unparsable files,
// invalid parameter combinations.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resource-contract violations: PCA saturation or busy discharge,
// CoPE accumulation-window capacity exceeded.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Link-budget infeasibility: the requested resolution or supported size
// cannot be reached within the power bracket.
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical-model violations: unstable integration steps, indeterminate
// optical levels, diverging reservoir states.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ceona
