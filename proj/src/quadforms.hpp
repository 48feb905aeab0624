#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "arith.hpp"

namespace sc7 {

// a X^2 + b XY + c Y^2, positive definite.
struct BinaryQF {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 1;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  bool is_reduced() const;

  friend bool operator==(const BinaryQF&, const BinaryQF&) = default;
  friend auto operator<=>(const BinaryQF&, const BinaryQF&) = default;
};

// Weighted class count; non-negative with denominator dividing 6.
class HurwitzValue {
 public:
  explicit HurwitzValue(Rational value);
  const Rational& value() const { return value_; }
  std::string to_string() const { return value_.to_string(); }
  friend bool operator==(const HurwitzValue&, const HurwitzValue&) = default;

 private:
  Rational value_;
};

// True when -D = 0 or 1 mod 4, D > 0.
bool is_negative_discriminant(std::int64_t D);

// Representatives -a < b <= a <= c (b >= 0 when a = c) of discriminant -D,
// primitive and imprimitive, sorted by (a, b, c).
std::vector<BinaryQF> reduced_forms(std::int64_t D);

// Proper (SL2(Z)) equivalent of a positive definite form in reduced position.
BinaryQF reduce(BinaryQF f);

// The form f(p x + q y, r x + s y).
BinaryQF transform(const BinaryQF& f, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s);

// H(-D): classes of multiples of X^2 + Y^2 weigh 1/2, of X^2 + XY + Y^2 weigh 1/3.
HurwitzValue hurwitz(std::int64_t D);

// H(-N) when -N is a discriminant, otherwise H(-4N).
HurwitzValue hurwitz_adjusted(std::int64_t N);

// H(-D) for fundamental -D from the character sum sum_{m=1}^{D} (-D/m) m.
HurwitzValue dirichlet_H(std::int64_t D);

// H(-D f^2) for fundamental -D via sum_{d | f} mu(d) (-D/d) sigma1(f/d).
HurwitzValue cohen_scaled_H(std::int64_t D, std::int64_t f);

}  // namespace sc7
