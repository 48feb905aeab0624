#include "routes.hpp"

#include <algorithm>

#include "eisenstein.hpp"
#include "error.hpp"
#include "partitions.hpp"
#include "qseries.hpp"
#include "ternary.hpp"

namespace sc7 {

std::string_view route_name(Route r) {
  switch (r) {
    case Route::enumeration: return "enum";
    case Route::qseries: return "qseries";
    case Route::eta: return "eta";
    case Route::theta: return "theta";
    case Route::theorem: return "theorem";
    case Route::cor2: return "cor2";
  }
  return "?";
}

std::optional<Route> parse_route(std::string_view name) {
  for (Route r : kAllRoutes)
    if (route_name(r) == name) return r;
  return std::nullopt;
}

std::optional<std::string> RouteEvaluator::not_applicable(std::int64_t n, Route route) {
  if (route != Route::theorem && route != Route::cor2) return std::nullopt;
  if (n < 1 || n % 2 == 0) return "n = " + std::to_string(n) + " is not a positive odd integer";
  if (mod(n, 7) == 5) return "n = " + std::to_string(n) + " is 5 mod 7";
  if (route == Route::cor2 && mod(n, 8) != 7) {
    const Discriminant d = discriminant_of(n);
    if (!is_fundamental(-d.D)) return "-D_n = -" + std::to_string(d.D) + " is not a fundamental discriminant";
  }
  return std::nullopt;
}

namespace {

// Size for a cache that must hold index n, growing at least geometrically.
std::size_t grown(std::size_t current, std::int64_t n) {
  return std::max<std::size_t>({static_cast<std::size_t>(n) + 1, 2 * current, 64});
}

}  // namespace

Rational RouteEvaluator::value(std::int64_t n, Route route) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  if (auto reason = not_applicable(n, route)) throw HypothesisViolation(std::string(route_name(route)) + ": " + *reason);
  const auto idx = static_cast<std::size_t>(n);
  switch (route) {
    case Route::enumeration:
      if (idx >= enum_counts_.size()) enum_counts_ = sc_counts_upto(static_cast<int>(grown(enum_counts_.size(), n)) - 1, 7);
      return Rational(enum_counts_[idx]);
    case Route::qseries:
      if (idx >= qseries_.size()) {
        const int prec = static_cast<int>(grown(qseries_.size(), n));
        qseries_ = scgen_coeffs(7, prec).coefficients();
      }
      return qseries_[idx];
    case Route::eta:
      if (idx >= eta_.size()) {
        const int prec = static_cast<int>(grown(eta_.size(), n)) + 2;
        const QSeries s = eta_quotient_coeffs(sc7_eta_spec(), prec);
        eta_.assign(s.coefficients().begin() + 2, s.coefficients().end());
      }
      return eta_[idx];
    case Route::theta:
      if (idx >= theta_.size()) theta_ = sc7_from_thetas_upto(static_cast<int>(grown(theta_.size(), n)) - 1);
      return theta_[idx];
    case Route::theorem:
      return theorem1_sc7(n);
    case Route::cor2:
      return corollary2_sc7(n);
  }
  throw InvalidArgument("unknown route");
}

}  // namespace sc7
