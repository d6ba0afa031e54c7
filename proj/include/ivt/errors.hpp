#pragma once

#include <stdexcept>
#include <string>

namespace ivt {

// An orbit exhausted OrbitConfig::max_steps without revisiting a state.
class CycleNotFound : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Two internal routes that must agree did not.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace ivt
