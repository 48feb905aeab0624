#include <doctest.h>

#include "error.hpp"
#include "routes.hpp"
#include "verify.hpp"

using namespace sc7;

TEST_CASE("route names round trip") {
  for (Route r : kAllRoutes) CHECK(parse_route(route_name(r)) == r);
  CHECK_FALSE(parse_route("bogus").has_value());
}

TEST_CASE("route domains") {
  CHECK_FALSE(RouteEvaluator::not_applicable(10, Route::qseries));
  CHECK(RouteEvaluator::not_applicable(10, Route::theorem));
  CHECK(RouteEvaluator::not_applicable(5, Route::theorem));
  CHECK(RouteEvaluator::not_applicable(25, Route::cor2));
  CHECK_FALSE(RouteEvaluator::not_applicable(7, Route::cor2));
  RouteEvaluator eval;
  CHECK_THROWS_AS(eval.value(5, Route::theorem), HypothesisViolation);
  CHECK_THROWS_AS(eval.value(-1, Route::qseries), InvalidArgument);
}

TEST_CASE("golden values along every route") {
  RouteEvaluator eval;
  for (auto [n, v] : {std::pair{9, 2}, {25, 4}, {11, 1}, {0, 1}}) {
    for (Route r : kAllRoutes) {
      if (RouteEvaluator::not_applicable(n, r)) continue;
      CHECK(eval.value(n, r) == Rational(v));
    }
  }
}

TEST_CASE("caches grow without changing earlier answers") {
  RouteEvaluator a, b;
  for (std::int64_t n : {3, 70, 10, 200, 150}) {
    for (Route r : {Route::enumeration, Route::qseries, Route::eta, Route::theta}) {
      RouteEvaluator fresh;
      REQUIRE(a.value(n, r) == fresh.value(n, r));
    }
  }
  CHECK(b.value(299, Route::enumeration) == b.value(299, Route::qseries));
}

TEST_CASE("verify registry") {
  CHECK(check_names().size() == 7);
  CHECK_THROWS_AS(run_check("nope", 10), InvalidArgument);
  CHECK_THROWS_AS(run_check("vanishing-7mod8", -1), InvalidArgument);
  CHECK(default_max("theta-identity") == 498);
  const auto v = run_check("vanishing-7mod8", 500);
  CHECK(v.ok());
  CHECK(v.cases == 62);
  CHECK(v.summary() == "OK 62 cases");
  for (auto name : check_names()) {
    const auto rep = run_check(name, 60);
    INFO(std::string(name), " ", rep.summary());
    CHECK(rep.ok());
    CHECK(rep.cases > 0);
  }
}

TEST_CASE("report summary on failure") {
  VerifyReport rep{"g-basis", 3, Counterexample{"m=5", "a=1", "b=2"}};
  CHECK_FALSE(rep.ok());
  CHECK(rep.summary() == "FAIL g-basis at m=5: lhs=a=1 rhs=b=2");
}
