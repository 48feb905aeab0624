#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sc7 {

using BigInt = mpz_class;

// Exact fraction, always stored in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  Rational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  // Only valid when is_integer() and the value fits; throws otherwise.
  std::int64_t to_int64() const;

  // "p/q", or the bare integer when the denominator is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  const mpq_class& raw() const { return value_; }
  mpq_class& raw() { return value_; }

 private:
  mpq_class value_{0};
};

// p^h || m with cofactor m / p^h.
struct Valuation {
  int exponent = 0;
  std::int64_t cofactor = 1;
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

bool is_prime(std::int64_t n);

// Prime factorization by trial division, as (prime, exponent) pairs in
// increasing prime order. n >= 1.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

Valuation val_decompose(std::int64_t m, std::int64_t p);

// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
int legendre(std::int64_t a, std::int64_t p);

// chi_D(n) for n >= 1: completely multiplicative over the factorization of n,
// Legendre symbol at odd primes, and at 2: 0 for even D, (-1)^((D^2-1)/8)
// for odd D.
int kronecker(std::int64_t D, std::int64_t n);

// kronecker(D, m) for every 1 <= m <= n, indexed by m (entry 0 unused).
std::vector<int> kronecker_table(std::int64_t D, std::int64_t n);

int mobius(std::int64_t n);
std::int64_t sigma1(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
bool is_squarefree(std::int64_t n);

// Negative D only.
bool is_fundamental(std::int64_t D);

// |O_K^x| for K = Q(sqrt(D)), D < 0 a discriminant (D = 0, 1 mod 4).
int unit_count(std::int64_t D);

std::int64_t isqrt(std::int64_t n);
Rational pow_rational(std::int64_t base, int exponent);

// Non-negative residue of a mod m, m > 0.
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace sc7
