#pragma once

#include <stdexcept>
#include <string>

namespace leosim {

// Invalid or inconsistent configuration. Raised before any simulation work.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Physically meaningless input to a numeric routine.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A state machine was asked to take a transition it does not allow.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace leosim
