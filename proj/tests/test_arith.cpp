#include <doctest.h>

#include <random>

#include "arith.hpp"
#include "error.hpp"
#include "oracles.hpp"

using namespace sc7;

TEST_CASE("rational stays reduced with positive denominator") {
  Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(8, 4).to_string() == "2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
  CHECK(Rational(1, 7) - Rational(8, 49) == Rational(-1, 49));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK_THROWS_AS(Rational(1, 0), InvalidArgument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidArgument);
  CHECK_THROWS_AS(Rational(1, 2).to_int64(), InvalidArgument);
  CHECK(Rational(-5).to_int64() == -5);
}

TEST_CASE("rational arithmetic is exact on large values") {
  Rational big = pow_rational(2, 100);
  CHECK(big.to_string() == "1267650600228229401496703205376");
  CHECK((big + 1 - big) == Rational(1));
  CHECK(pow_rational(7, -2) == Rational(1, 49));
}

TEST_CASE("val_decompose") {
  CHECK(val_decompose(56, 2) == Valuation{3, 7});
  CHECK(val_decompose(7 * 13, 7) == Valuation{1, 13});
  CHECK(val_decompose(91, 2) == Valuation{0, 91});
  CHECK_THROWS_AS(val_decompose(0, 2), InvalidArgument);
  CHECK_THROWS_AS(val_decompose(12, 4), InvalidArgument);

  std::mt19937_64 rng(11);
  const std::int64_t primes[] = {2, 3, 5, 7, 11, 13};
  for (int i = 0; i < 500; ++i) {
    const std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 1000000)(rng);
    for (std::int64_t p : primes) {
      const auto v = val_decompose(m, p);
      std::int64_t pk = 1;
      for (int k = 0; k < v.exponent; ++k) pk *= p;
      CHECK(pk * v.cofactor == m);
      CHECK(v.cofactor % p != 0);
    }
  }
}

TEST_CASE("kronecker examples") {
  for (std::int64_t D : {-91, -308, 7, 5, -4})
    CHECK(kronecker(D, 1) == 1);
  CHECK(kronecker(7, 2) == 1);
  CHECK(kronecker(-91, 3) == -1);
  CHECK(kronecker(-308, 2) == 0);
  CHECK(kronecker(-84, 5) == 1);
  CHECK_THROWS_AS(kronecker(5, 0), InvalidArgument);
}

TEST_CASE("kronecker at odd primes matches squares mod p") {
  for (std::int64_t p = 3; p < 100; p += 2) {
    if (!is_prime(p)) continue;
    for (std::int64_t D = -300; D <= 300; ++D) {
      if (D % p == 0) continue;
      CHECK(kronecker(D, p) == oracle::legendre_by_squares(D, p));
      CHECK(legendre(D, p) == oracle::legendre_by_squares(D, p));
    }
  }
  CHECK_THROWS_AS(legendre(3, 9), InvalidArgument);
  CHECK_THROWS_AS(legendre(3, 2), InvalidArgument);
}

TEST_CASE("kronecker is completely multiplicative") {
  for (std::int64_t D : {-91, -308, -756, 7})
    for (std::int64_t m = 1; m <= 200; ++m)
      for (std::int64_t n = 1; n <= 200; ++n) REQUIRE(kronecker(D, m * n) == kronecker(D, m) * kronecker(D, n));
}

TEST_CASE("kronecker_table agrees with kronecker") {
  for (std::int64_t D : {-3, -4, -91, -308, -756, -20475, 7, 12}) {
    const auto t = kronecker_table(D, 3000);
    for (std::int64_t m = 1; m <= 3000; ++m) REQUIRE(t[static_cast<std::size_t>(m)] == kronecker(D, m));
  }
}

TEST_CASE("mobius, sigma1, divisors") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(15) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(30) == -1);
  CHECK(sigma1(15) == 24);
  CHECK(sigma1(5) == 6);
  CHECK(sigma1(1) == 1);
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  for (std::int64_t n = 1; n <= 1000; ++n) {
    int s = 0;
    std::int64_t sig = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      s += mobius(d);
      sig += d;
    }
    REQUIRE(s == (n == 1 ? 1 : 0));
    REQUIRE(sigma1(n) == sig);
  }
}

TEST_CASE("fundamental discriminants") {
  CHECK(is_fundamental(-91));
  CHECK_FALSE(is_fundamental(-756));
  CHECK(is_fundamental(-4));
  CHECK(is_fundamental(-3));
  CHECK(is_fundamental(-8));
  CHECK(is_fundamental(-308));
  CHECK_FALSE(is_fundamental(-12));
  CHECK_FALSE(is_fundamental(-16));
  CHECK_FALSE(is_fundamental(-7 * 9));
  CHECK_FALSE(is_fundamental(-5));
  CHECK_THROWS_AS(is_fundamental(0), InvalidArgument);
  CHECK_THROWS_AS(is_fundamental(5), InvalidArgument);
}

TEST_CASE("unit_count") {
  CHECK(unit_count(-3) == 6);
  CHECK(unit_count(-4) == 4);
  CHECK(unit_count(-84) == 2);
  CHECK(unit_count(-12) == 6);
  CHECK(unit_count(-16) == 4);
  CHECK_THROWS_AS(unit_count(-5), InvalidArgument);
  CHECK_THROWS_AS(unit_count(4), InvalidArgument);
}

TEST_CASE("primes and square roots") {
  int count = 0;
  for (std::int64_t n = 0; n < 1000; ++n) count += is_prime(n) ? 1 : 0;
  CHECK(count == 168);
  for (std::int64_t n = 0; n < 5000; ++n) {
    const auto r = isqrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
}
