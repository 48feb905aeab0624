#pragma once

#include <string>
#include <vector>

#include "arith.hpp"

namespace sc7 {

// Truncated power series in q with exact coefficients. Exponents at or above
// precision() are unknown rather than zero, and no operation reads them.
class QSeries {
 public:
  explicit QSeries(int precision);
  QSeries(std::vector<Rational> coefficients, int precision);

  static QSeries one(int precision);

  int precision() const { return static_cast<int>(coeffs_.size()); }
  const Rational& operator[](int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  void set(int k, Rational value);

  // In-place multiplication / division by the binomial (1 + sign * q^k).
  void mul_binomial(int k, int sign);
  void div_binomial(int k, int sign);

  // Multiply by q^k; the precision grows by k since the low terms are known zeros.
  QSeries shifted(int k) const;

  QSeries truncated(int precision) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Cauchy product truncated at the smaller precision.
QSeries series_mul(const QSeries& a, const QSeries& b);

// a / b for b with non-zero constant term, at the smaller precision.
QSeries series_div(const QSeries& a, const QSeries& b);
QSeries series_inverse(const QSeries& b);

// prod_{n >= 1} (1 + sign * q^(scale * n)) to the given precision.
QSeries euler_factor(int scale, int sign, int precision);

// sum_{n >= 0} sc_t(n) q^n, expanded from the product
// prod (1 - q^(2tn))^((t-1)/2) (1 + q^(2n-1)) / (1 + q^(t(2n-1))).
QSeries scgen_coeffs(int t, int precision);

struct EtaFactor {
  int scale;
  int exponent;
};

// prod eta(scale * tau)^exponent. Construction checks that the net power of q
// carried by the eta prefactors, sum(scale * exponent) / 24, is a
// non-negative integer.
class EtaQuotientSpec {
 public:
  explicit EtaQuotientSpec(std::vector<EtaFactor> factors);

  const std::vector<EtaFactor>& factors() const { return factors_; }
  int leading_power() const { return leading_power_; }

 private:
  std::vector<EtaFactor> factors_;
  int leading_power_ = 0;
};

// eta(2t)^2 eta(14t) eta(7t) eta(28t) / (eta(4t) eta(t)) = sum sc_7(n) q^(n+2).
EtaQuotientSpec sc7_eta_spec();

QSeries eta_quotient_coeffs(const EtaQuotientSpec& spec, int precision);

// JSON array of coefficient strings ("p/q" or bare integers).
std::string to_json(const QSeries& s);

}  // namespace sc7
