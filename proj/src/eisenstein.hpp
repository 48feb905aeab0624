#pragma once

#include <cstdint>

#include "arith.hpp"

namespace sc7 {

// Two case assignments for alpha when h_2(m) is even and h_2'(m) = 3 or 7 mod 8.
//   printed:   0 for h_2' = 3 mod 8,          2^(-h_2/2) for h_2' = 7 mod 8
//   effective: 2^(-h_2/2) for h_2' = 3 mod 8, 0 for h_2' = 7 mod 8
// Only the effective assignment reproduces the lattice representation
// numbers; tests pin both.
enum class AlphaConvention { printed, effective };

// How Theta_1 is expressed in the Eisenstein basis.
//   corrected: Theta_1 = g1 - 3 g3, agreeing with the closed formula for R(Q1; m)
//   printed:   Theta_1 = g1 - 3 g2
enum class ThetaRelation { corrected, printed };

// -D_n for odd n: D = 4^epsilon * (7n + 14), epsilon = 1 iff n = 1 mod 4.
struct Discriminant {
  std::int64_t n;
  std::int64_t D;
  int epsilon;
};

Discriminant discriminant_of(std::int64_t n);

Rational alpha(std::int64_t m, AlphaConvention conv);

// p odd prime.
Rational A_factor(std::int64_t p, std::int64_t m);

// lambda(7m, 28) * pi * sqrt(7m) = 49 H*(-7m) / 4 for m = 5 mod 8, else
// 49 H*(-7m) / 12, with H* = hurwitz_adjusted.
Rational lambda_normalized(std::int64_t m);

// Coefficient of q^m (m >= 1) in g1, g2, g3. The common prefactor
// 2 pi sqrt(7) lambda(7m, 28) sqrt(m) equals 2 * lambda_normalized(m), so
// the coefficients are exact rationals.
Rational g_coeff(int i, std::int64_t m, AlphaConvention conv);

// Coefficient of q^m (m >= 1) in Theta_i rebuilt from the g basis.
Rational theta_from_basis(int i, std::int64_t m, AlphaConvention conv,
                          ThetaRelation relation = ThetaRelation::corrected);

// R(Q_i; m) from the closed table, m = n + 2 odd, m >= 3, 7 does not divide m.
Rational closed_R(int i, std::int64_t m);

// sc_7(n) for odd n >= 1, n != 5 mod 7.
Rational theorem1_sc7(std::int64_t n);

// sc_7(n) through the character-sum formula for H(-D_n). Requires -D_n
// fundamental except for n = 7 mod 8, where the value is 0 outright.
Rational corollary2_sc7(std::int64_t n);

// sc_7((n + 2) f^2 - 2) = sc_7(n) * sum_{d | f} mu(d) (-D_n / d) sigma1(f / d)
// for -D_n fundamental and odd f coprime to 7.
Rational corollary3_scale(std::int64_t n, std::int64_t f);

}  // namespace sc7
