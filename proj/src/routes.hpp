#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"

namespace sc7 {

// The independent ways of computing sc_7(n).
enum class Route { enumeration, qseries, eta, theta, theorem, cor2 };

inline constexpr Route kAllRoutes[] = {Route::enumeration, Route::qseries, Route::eta,
                                       Route::theta,       Route::theorem, Route::cor2};

// "enum", "qseries", "eta", "theta", "theorem", "cor2"
std::string_view route_name(Route r);
std::optional<Route> parse_route(std::string_view name);

// Evaluates sc_7(n) along any route, caching the series-based routes and
// extending them geometrically as larger n are requested. Not thread-safe;
// use one evaluator per thread.
class RouteEvaluator {
 public:
  // Throws HypothesisViolation when n lies outside the route's domain.
  Rational value(std::int64_t n, Route route);

  // Empty when the route applies to n, otherwise the violated hypothesis.
  static std::optional<std::string> not_applicable(std::int64_t n, Route route);

 private:
  std::vector<std::int64_t> enum_counts_;
  std::vector<Rational> qseries_;
  std::vector<Rational> eta_;
  std::vector<Rational> theta_;
};

}  // namespace sc7
