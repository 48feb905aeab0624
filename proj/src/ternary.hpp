#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "arith.hpp"
#include "qseries.hpp"

namespace sc7 {

// a x^2 + b y^2 + c z^2 + d yz + e xz + f xy
class TernaryQF {
 public:
  TernaryQF(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e, std::int64_t f);

  std::int64_t operator()(std::int64_t x, std::int64_t y, std::int64_t z) const {
    return a_ * x * x + b_ * y * y + c_ * z * z + d_ * y * z + e_ * x * z + f_ * x * y;
  }

  // Determinant of the Gram matrix [[2a, f, e], [f, 2b, d], [e, d, 2c]].
  std::int64_t gram_determinant() const;

  // Largest |x|, |y|, |z| over Q(x, y, z) <= m. Minimising Q with one
  // coordinate held fixed gives coordinate_i^2 <= 2m * adj(G)_ii / det(G).
  std::array<std::int64_t, 3> box_bounds(std::int64_t m) const;

 private:
  std::int64_t a_, b_, c_, d_, e_, f_;
};

// x^2 + y^2 + 2z^2 - yz
TernaryQF form_q1();
// x^2 + 4y^2 + 8z^2 - 4yz
TernaryQF form_q2();
// 2x^2 + 2y^2 + 3z^2 + 2yz + 2xz + 2xy
TernaryQF form_q3();

// Number of (x, y, z) in Z^3 with Q(x, y, z) = m.
std::int64_t rep_count(const TernaryQF& q, std::int64_t m);

// sum_{v in Z^3} q^{Q(v)} up to the given precision, from one sweep of the
// box for m = precision - 1.
QSeries theta_coeffs(const TernaryQF& q, int precision);

// (1/14) R(Q1; n+2) - (1/7) R(Q2; n+2) + (1/14) R(Q3; n+2).
Rational sc7_from_thetas(int n);

// The same combination for every 0 <= n <= max_n, from three theta sweeps.
std::vector<Rational> sc7_from_thetas_upto(int max_n);

}  // namespace sc7
