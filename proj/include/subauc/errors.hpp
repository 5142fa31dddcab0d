#pragma once

#include <stdexcept>
#include <string>

namespace subauc {

// Precondition failures on caller-supplied arguments (out-of-range items,
// negative values, bad sizes).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive operation was asked to run on a ground set larger than its cap.
class GroundSetTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration produced more results than the caller allowed.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A multi-peak set system broke one of its structural guarantees.
class MalformedSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance / prices document violates the file schema. The message is
// prefixed with a path such as "bidders[1].peaks".
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A price-update rule broke the engine contract (empty raise, false
// certificate, non-positive increment).
class RuleViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// No specialised demand oracle exists for the valuation class.
class NoFastOracle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace subauc
