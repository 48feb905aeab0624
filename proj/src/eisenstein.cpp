#include "eisenstein.hpp"

#include <string>

#include "error.hpp"
#include "quadforms.hpp"

namespace sc7 {

namespace {

void require_odd_positive(std::int64_t n, const char* what) {
  if (n < 1 || n % 2 == 0)
    throw HypothesisViolation(std::string(what) + ": n = " + std::to_string(n) + " is not a positive odd integer");
}

void require_theorem_hypothesis(std::int64_t n, const char* what) {
  require_odd_positive(n, what);
  if (mod(n, 7) == 5)
    throw HypothesisViolation(std::string(what) + ": n = " + std::to_string(n) + " is 5 mod 7");
}

}  // namespace

Discriminant discriminant_of(std::int64_t n) {
  require_odd_positive(n, "discriminant_of");
  const int eps = mod(n, 4) == 1 ? 1 : 0;
  return {n, (eps ? 4 : 1) * (7 * n + 14), eps};
}

Rational alpha(std::int64_t m, AlphaConvention conv) {
  const Valuation v = val_decompose(m, 2);
  const int h = v.exponent;
  if (h % 2 == 1) return Rational(3) * pow_rational(2, -(1 + h) / 2);
  const std::int64_t r = mod(v.cofactor, 8);
  if (r % 4 == 1) return Rational(3) * pow_rational(2, -1 - h / 2);
  const bool nonzero = conv == AlphaConvention::printed ? r == 7 : r == 3;
  return nonzero ? pow_rational(2, -h / 2) : Rational(0);
}

Rational A_factor(std::int64_t p, std::int64_t m) {
  if (p == 2 || !is_prime(p)) throw InvalidArgument("A_factor: p must be an odd prime");
  const Valuation v = val_decompose(m, p);
  const int h = v.exponent;
  const Rational inv(1, p);
  if (h % 2 == 1) return inv - Rational(1 + p) * pow_rational(p, -(3 + h) / 2);
  if (legendre(-v.cofactor, p) == -1) return inv - Rational(2) * pow_rational(p, -1 - h / 2);
  return inv;
}

Rational lambda_normalized(std::int64_t m) {
  if (m < 1) throw InvalidArgument("lambda_normalized: m must be positive");
  const Rational H = hurwitz_adjusted(7 * m).value();
  return mod(m, 8) == 5 ? Rational(49, 4) * H : Rational(49, 12) * H;
}

Rational g_coeff(int i, std::int64_t m, AlphaConvention conv) {
  if (m < 1) throw InvalidArgument("g_coeff: m must be positive");
  const Rational prefactor = Rational(2) * lambda_normalized(m);
  switch (i) {
    case 1:
      return prefactor * alpha(7 * m, conv) * (A_factor(7, 7 * m) - Rational(1, 7));
    case 2:
      return Rational(1, 49) * prefactor * alpha(7 * m, conv);
    case 3:
      return prefactor * (A_factor(7, 7 * m) - Rational(1, 7));
    default:
      throw InvalidArgument("g_coeff: index must be 1, 2 or 3");
  }
}

Rational theta_from_basis(int i, std::int64_t m, AlphaConvention conv, ThetaRelation relation) {
  const Rational g1 = g_coeff(1, m, conv);
  switch (i) {
    case 1:
      return g1 - Rational(3) * g_coeff(relation == ThetaRelation::corrected ? 3 : 2, m, conv);
    case 2:
      return g1 - Rational(3, 2) * g_coeff(3, m, conv);
    case 3:
      return g1 + Rational(14) * g_coeff(2, m, conv);
    default:
      throw InvalidArgument("theta_from_basis: index must be 1, 2 or 3");
  }
}

Rational closed_R(int i, std::int64_t m) {
  if (i < 1 || i > 3) throw InvalidArgument("closed_R: index must be 1, 2 or 3");
  if (m < 3 || m % 2 == 0)
    throw HypothesisViolation("closed_R: m = " + std::to_string(m) + " is not an odd integer >= 3");
  if (m % 7 == 0) throw HypothesisViolation("closed_R: m = " + std::to_string(m) + " is divisible by 7");
  const Rational H = hurwitz_adjusted(7 * m).value();
  const std::int64_t n = m - 2;
  // Rows: n = 1 mod 4, n = 3 mod 8, n = 7 mod 8.
  static const Rational table[3][3] = {
      {Rational(2), Rational(8), Rational(4)},
      {Rational(0), Rational(2), Rational(2)},
      {Rational(3, 2), Rational(3), Rational(0)},
  };
  const int col = mod(n, 4) == 1 ? 0 : (mod(n, 8) == 3 ? 1 : 2);
  return table[i - 1][col] * H;
}

Rational theorem1_sc7(std::int64_t n) {
  require_theorem_hypothesis(n, "theorem1_sc7");
  const Discriminant d = discriminant_of(n);
  if (mod(n, 8) == 7) return Rational(0);
  const Rational H = hurwitz(d.D).value();
  return d.epsilon == 1 ? H / Rational(4) : H / Rational(2);
}

Rational corollary2_sc7(std::int64_t n) {
  require_theorem_hypothesis(n, "corollary2_sc7");
  if (mod(n, 8) == 7) return Rational(0);
  const Discriminant d = discriminant_of(n);
  if (!is_fundamental(-d.D))
    throw HypothesisViolation("corollary2_sc7: -D_n = -" + std::to_string(d.D) + " is not fundamental");
  BigInt sum = 0;
  const auto chi = kronecker_table(-d.D, d.D);
  for (std::int64_t m = 1; m <= d.D; ++m)
    if (chi[static_cast<std::size_t>(m)] != 0) sum += BigInt(static_cast<long>(chi[static_cast<std::size_t>(m)] * m));
  const std::int64_t scale = d.epsilon == 1 ? 4 * d.D : 2 * d.D;
  return -Rational(sum) / Rational(scale);
}

Rational corollary3_scale(std::int64_t n, std::int64_t f) {
  require_theorem_hypothesis(n, "corollary3_scale");
  if (f < 1 || f % 2 == 0) throw HypothesisViolation("corollary3_scale: f = " + std::to_string(f) + " is not odd");
  if (f % 7 == 0) throw HypothesisViolation("corollary3_scale: f = " + std::to_string(f) + " is divisible by 7");
  const Discriminant d = discriminant_of(n);
  if (!is_fundamental(-d.D))
    throw HypothesisViolation("corollary3_scale: -D_n = -" + std::to_string(d.D) + " is not fundamental");
  std::int64_t sum = 0;
  for (std::int64_t div : divisors(f)) sum += mobius(div) * kronecker(-d.D, div) * sigma1(f / div);
  return theorem1_sc7(n) * Rational(sum);
}

}  // namespace sc7
