#include "quadforms.hpp"

#include "error.hpp"

namespace sc7 {

bool BinaryQF::is_reduced() const {
  if (a <= 0 || discriminant() >= 0) return false;
  if (!(-a < b && b <= a && a <= c)) return false;
  return !(a == c && b < 0);
}

HurwitzValue::HurwitzValue(Rational value) : value_(std::move(value)) {
  if (value_.sign() < 0) throw InvalidArgument("HurwitzValue: negative value " + value_.to_string());
  if (6 % value_.denominator() != 0)
    throw InvalidArgument("HurwitzValue: denominator of " + value_.to_string() + " does not divide 6");
}

bool is_negative_discriminant(std::int64_t D) {
  const std::int64_t r = mod(-D, 4);
  return D > 0 && (r == 0 || r == 1);
}

namespace {

void require_discriminant(std::int64_t D) {
  if (!is_negative_discriminant(D))
    throw HypothesisViolation("-" + std::to_string(D) +
                              " is not a negative discriminant (need D > 0 and -D = 0 or 1 mod 4)");
}

void require_fundamental(std::int64_t D) {
  require_discriminant(D);
  if (!is_fundamental(-D))
    throw HypothesisViolation("-" + std::to_string(D) + " is not a fundamental discriminant");
}

}  // namespace

std::vector<BinaryQF> reduced_forms(std::int64_t D) {
  require_discriminant(D);
  std::vector<BinaryQF> forms;
  // Reduced forms satisfy D = 4ac - b^2 >= 3a^2.
  for (std::int64_t a = 1; 3 * a * a <= D; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (mod(b - D, 2) != 0) continue;
      const std::int64_t num = b * b + D;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a || (c == a && b < 0)) continue;
      forms.push_back({a, b, c});
    }
  }
  return forms;
}

BinaryQF transform(const BinaryQF& f, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
  return {f.a * p * p + f.b * p * r + f.c * r * r,
          2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s,
          f.a * q * q + f.b * q * s + f.c * s * s};
}

BinaryQF reduce(BinaryQF f) {
  if (f.a <= 0 || f.discriminant() >= 0) throw InvalidArgument("reduce: form is not positive definite");
  for (;;) {
    // x -> x + k y moves b by 2ak; bring b into (-a, a].
    std::int64_t target = mod(f.b, 2 * f.a);
    if (target > f.a) target -= 2 * f.a;
    if (const std::int64_t k = (target - f.b) / (2 * f.a); k != 0) f = transform(f, 1, k, 0, 1);
    if (f.a > f.c) {
      // (x, y) -> (-y, x)
      f = {f.c, -f.b, f.a};
      continue;
    }
    // a = c: (a, b, a) ~ (a, -b, a)
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
  }
}

HurwitzValue hurwitz(std::int64_t D) {
  Rational total(0);
  for (const auto& f : reduced_forms(D)) {
    if (f.b == 0 && f.a == f.c)
      total += Rational(1, 2);
    else if (f.b == f.a && f.a == f.c)
      total += Rational(1, 3);
    else
      total += 1;
  }
  return HurwitzValue(total);
}

HurwitzValue hurwitz_adjusted(std::int64_t N) {
  if (N < 1) throw InvalidArgument("hurwitz_adjusted: N must be positive");
  return is_negative_discriminant(N) ? hurwitz(N) : hurwitz(4 * N);
}

// The character sum and Cohen's formula both produce the class number
// h(-D) = (number of reduced forms) scaled by 1/w(-D), w = |O_K^x| / 2.
// H(-D) = h(-D) / w(-D); the two agree except at D = 3, 4.
HurwitzValue dirichlet_H(std::int64_t D) {
  require_fundamental(D);
  BigInt sum = 0;
  const auto chi = kronecker_table(-D, D);
  for (std::int64_t m = 1; m <= D; ++m)
    if (chi[static_cast<std::size_t>(m)] != 0) sum += BigInt(static_cast<long>(chi[static_cast<std::size_t>(m)] * m));
  const int units = unit_count(-D);
  const Rational class_number = Rational(-units) * Rational(sum) / Rational(2 * D);
  return HurwitzValue(class_number / Rational(units / 2));
}

HurwitzValue cohen_scaled_H(std::int64_t D, std::int64_t f) {
  require_fundamental(D);
  if (f < 1) throw InvalidArgument("cohen_scaled_H: f must be positive");
  std::int64_t sum = 0;
  for (std::int64_t d : divisors(f)) sum += mobius(d) * kronecker(-D, d) * sigma1(f / d);
  const auto class_number = static_cast<std::int64_t>(reduced_forms(D).size());
  const int w = unit_count(-D) / 2;
  return HurwitzValue(Rational(class_number, w) * Rational(sum));
}

}  // namespace sc7
