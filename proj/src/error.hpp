#pragma once

#include <stdexcept>
#include <string>

namespace sc7 {

// Malformed arguments: zero where a positive integer is required, unknown
// names, a non-prime where a prime is required.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical hypothesis of the requested formula does not hold for the
// input (invalid discriminant, n = 5 mod 7 for the class-number routes,
// non-fundamental discriminant, ...). Distinct from InvalidArgument so the
// front ends can report "not applicable" separately from "misuse".
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace sc7
