#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sc7 {

struct Counterexample {
  std::string where;  // e.g. "n=9" or "D=91,f=15"
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::string check;
  std::int64_t cases = 0;
  std::optional<Counterexample> failure;

  bool ok() const { return !failure.has_value(); }
  // "OK <cases> cases" or "FAIL <check> at <where>: lhs=<lhs> rhs=<rhs>"
  std::string summary() const;
};

// route-equivalence, vanishing-7mod8, theta-identity, closed-R-tables,
// g-basis, cohen-scaling, dirichlet-vs-forms
const std::vector<std::string_view>& check_names();

std::int64_t default_max(std::string_view check);

// Throws InvalidArgument for an unknown check or a negative bound.
VerifyReport run_check(std::string_view check, std::int64_t max);

}  // namespace sc7
