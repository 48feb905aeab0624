#include <doctest.h>

#include "error.hpp"
#include "oracles.hpp"
#include "partitions.hpp"
#include "qseries.hpp"

using namespace sc7;

namespace {

QSeries from_ints(std::vector<std::int64_t> c, int prec) {
  std::vector<Rational> r;
  for (auto v : c) r.emplace_back(v);
  r.resize(static_cast<std::size_t>(prec), Rational(0));
  return QSeries(std::move(r), prec);
}

}  // namespace

TEST_CASE("series basics") {
  CHECK_THROWS_AS(QSeries(0), InvalidArgument);
  QSeries s(4);
  CHECK_THROWS_AS(s[4], InvalidArgument);
  CHECK_THROWS_AS(s.set(4, 1), InvalidArgument);
  CHECK(QSeries::one(3)[0] == Rational(1));
  CHECK(from_ints({1, 2}, 3).shifted(2) == from_ints({0, 0, 1, 2}, 5));
}

TEST_CASE("series_mul") {
  CHECK(series_mul(from_ints({1, 1}, 5), from_ints({1, -1}, 5)) == from_ints({1, 0, -1}, 5));
  const auto s = from_ints({3, 1, 4, 1, 5}, 5);
  CHECK(series_mul(QSeries::one(5), s) == s);
  CHECK(series_mul(from_ints({1, 1, 1, 1, 1, 1}, 6), from_ints({1, -1}, 6)) == from_ints({1}, 6));
  CHECK(series_mul(from_ints({1, 1}, 3), from_ints({1, 1}, 8)).precision() == 3);
}

TEST_CASE("division and inversion") {
  const auto a = from_ints({2, 3, 0, 5, 7, 1}, 6);
  const auto b = from_ints({3, -1, 4}, 6);
  CHECK(series_mul(series_div(a, b), b) == a);
  CHECK(series_mul(series_inverse(b), b) == QSeries::one(6));
  CHECK(series_inverse(from_ints({2}, 3)) == QSeries({Rational(1, 2), 0, 0}, 3));
  CHECK_THROWS_AS(series_inverse(from_ints({0, 1}, 3)), InvalidArgument);

  QSeries c = a;
  c.mul_binomial(2, -1);
  CHECK(c == series_mul(a, from_ints({1, 0, -1}, 6)));
  c.div_binomial(2, -1);
  CHECK(c == a);
  c.div_binomial(3, +1);
  CHECK(c == series_div(a, from_ints({1, 0, 0, 1}, 6)));
}

TEST_CASE("euler_factor and the pentagonal number theorem") {
  CHECK(euler_factor(1, -1, 6) == from_ints({1, -1, -1, 0, 0, 1}, 6));
  CHECK(euler_factor(2, -1, 5) == from_ints({1, 0, -1, 0, -1}, 5));
  CHECK(euler_factor(5, +1, 1) == QSeries::one(1));
  const auto e = euler_factor(1, -1, 200);
  for (int n = 0; n < 200; ++n) REQUIRE(e[n] == Rational(oracle::pentagonal_coeff(n)));
  // prod (1 + q^n) counts partitions into distinct parts, which equals partitions into odd parts.
  const auto d = euler_factor(1, +1, 40);
  for (int n = 0; n < 40; ++n) {
    std::int64_t odd = 0;
    for (const auto& p : oracle::partitions(n))
      odd += std::all_of(p.begin(), p.end(), [](int k) { return k % 2 == 1; }) ? 1 : 0;
    REQUIRE(d[n] == Rational(odd));
  }
}

TEST_CASE("self-conjugate t-core generating function") {
  const auto s = scgen_coeffs(7, 20);
  CHECK(s[9] == Rational(2));
  CHECK(s[0] == Rational(1));
  CHECK(s[2] == Rational(0));
  for (int t : {3, 5, 7}) {
    const auto series = scgen_coeffs(t, 150);
    const auto poly = oracle::scgen(t, 150);
    const auto counts = sc_counts_upto(149, t);
    for (int n = 0; n < 150; ++n) {
      REQUIRE(series[n] == Rational(poly[static_cast<std::size_t>(n)]));
      REQUIRE(series[n] == Rational(counts[static_cast<std::size_t>(n)]));
    }
  }
  CHECK_THROWS_AS(scgen_coeffs(4, 10), InvalidArgument);
}

TEST_CASE("eta quotient spec") {
  CHECK(sc7_eta_spec().leading_power() == 2);
  CHECK_THROWS_AS(EtaQuotientSpec({{1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(EtaQuotientSpec({{1, -24}}), InvalidArgument);
  CHECK_THROWS_AS(EtaQuotientSpec({{0, 24}}), InvalidArgument);
  // eta(t)^24 = q prod (1 - q^n)^24
  const auto delta = eta_quotient_coeffs(EtaQuotientSpec({{1, 24}}), 6);
  CHECK(delta == from_ints({0, 1, -24, 252, -1472, 4830}, 6));
}

TEST_CASE("eta quotient for self-conjugate 7-cores") {
  const auto s = eta_quotient_coeffs(sc7_eta_spec(), 310);
  CHECK(s[0] == Rational(0));
  CHECK(s[1] == Rational(0));
  CHECK(s[2] == Rational(1));
  CHECK(s[11] == Rational(2));
  CHECK(s[13] == Rational(1));
  const auto g = scgen_coeffs(7, 308);
  const auto counts = sc_counts_upto(299, 7);
  for (int n = 0; n < 300; ++n) {
    REQUIRE(s[n + 2] == g[n]);
    REQUIRE(g[n] == Rational(counts[static_cast<std::size_t>(n)]));
    REQUIRE(g[n].is_integer());
    REQUIRE(g[n].sign() >= 0);
  }
}

TEST_CASE("json output") {
  CHECK(to_json(QSeries({1, Rational(-1, 2), 0}, 3)) == R"(["1","-1/2","0"])");
}
