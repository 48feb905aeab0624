#include "ternary.hpp"

#include "error.hpp"

namespace sc7 {

TernaryQF::TernaryQF(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e,
                     std::int64_t f)
    : a_(a), b_(b), c_(c), d_(d), e_(e), f_(f) {
  // Leading principal minors of the Gram matrix.
  if (2 * a_ <= 0 || 4 * a_ * b_ - f_ * f_ <= 0 || gram_determinant() <= 0)
    throw InvalidArgument("TernaryQF: form is not positive definite");
}

std::int64_t TernaryQF::gram_determinant() const {
  const std::int64_t g11 = 2 * a_, g22 = 2 * b_, g33 = 2 * c_;
  return g11 * (g22 * g33 - d_ * d_) - f_ * (f_ * g33 - d_ * e_) + e_ * (f_ * d_ - g22 * e_);
}

std::array<std::int64_t, 3> TernaryQF::box_bounds(std::int64_t m) const {
  if (m < 0) throw InvalidArgument("box_bounds: m must be non-negative");
  const std::int64_t det = gram_determinant();
  const std::array<std::int64_t, 3> cofactors{4 * b_ * c_ - d_ * d_, 4 * a_ * c_ - e_ * e_, 4 * a_ * b_ - f_ * f_};
  std::array<std::int64_t, 3> bounds{};
  for (std::size_t i = 0; i < 3; ++i) bounds[i] = isqrt(2 * m * cofactors[i] / det);
  return bounds;
}

// Q1 = x^2 + (y - z/2)^2 + (7/4) z^2, det G = 14: |x| <= sqrt(m), |y| <= sqrt(8m/7), |z| <= sqrt(4m/7).
TernaryQF form_q1() { return {1, 1, 2, -1, 0, 0}; }
// Q2 = x^2 + (2y - z)^2 + 7 z^2, det G = 224: |x| <= sqrt(m), |y| <= sqrt(2m/7), |z| <= sqrt(m/7).
TernaryQF form_q2() { return {1, 4, 8, -4, 0, 0}; }
// det G = 56: |x|, |y| <= sqrt(5m/7), |z| <= sqrt(3m/7).
TernaryQF form_q3() { return {2, 2, 3, 2, 2, 2}; }

std::int64_t rep_count(const TernaryQF& q, std::int64_t m) {
  if (m < 0) throw InvalidArgument("rep_count: m must be non-negative");
  const auto [bx, by, bz] = q.box_bounds(m);
  std::int64_t count = 0;
  for (std::int64_t z = -bz; z <= bz; ++z)
    for (std::int64_t y = -by; y <= by; ++y)
      for (std::int64_t x = -bx; x <= bx; ++x)
        if (q(x, y, z) == m) ++count;
  return count;
}

QSeries theta_coeffs(const TernaryQF& q, int precision) {
  if (precision < 1) throw InvalidArgument("theta_coeffs: precision must be positive");
  const auto [bx, by, bz] = q.box_bounds(precision - 1);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(precision), 0);
  for (std::int64_t z = -bz; z <= bz; ++z)
    for (std::int64_t y = -by; y <= by; ++y)
      for (std::int64_t x = -bx; x <= bx; ++x)
        if (const std::int64_t v = q(x, y, z); v < precision) ++counts[static_cast<std::size_t>(v)];
  std::vector<Rational> coeffs(counts.begin(), counts.end());
  return QSeries(std::move(coeffs), precision);
}

std::vector<Rational> sc7_from_thetas_upto(int max_n) {
  if (max_n < 0) throw InvalidArgument("sc7_from_thetas: n must be non-negative");
  const int prec = max_n + 3;
  const QSeries t1 = theta_coeffs(form_q1(), prec);
  const QSeries t2 = theta_coeffs(form_q2(), prec);
  const QSeries t3 = theta_coeffs(form_q3(), prec);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n)
    out.push_back(Rational(1, 14) * t1[n + 2] - Rational(1, 7) * t2[n + 2] + Rational(1, 14) * t3[n + 2]);
  return out;
}

Rational sc7_from_thetas(int n) {
  if (n < 0) throw InvalidArgument("sc7_from_thetas: n must be non-negative");
  const std::int64_t m = n + 2;
  return Rational(1, 14) * Rational(rep_count(form_q1(), m)) - Rational(1, 7) * Rational(rep_count(form_q2(), m)) +
         Rational(1, 14) * Rational(rep_count(form_q3(), m));
}

}  // namespace sc7
