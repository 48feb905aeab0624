#include "qseries.hpp"

#include <algorithm>

#include <json.hpp>

#include "error.hpp"

namespace sc7 {

QSeries::QSeries(int precision) {
  if (precision < 1) throw InvalidArgument("QSeries: precision must be positive");
  coeffs_.assign(static_cast<std::size_t>(precision), Rational(0));
}

QSeries::QSeries(std::vector<Rational> coefficients, int precision) : QSeries(precision) {
  const std::size_t n = std::min(coefficients.size(), coeffs_.size());
  std::move(coefficients.begin(), coefficients.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.begin());
}

QSeries QSeries::one(int precision) {
  QSeries s(precision);
  s.coeffs_[0] = 1;
  return s;
}

const Rational& QSeries::operator[](int k) const {
  if (k < 0 || k >= precision())
    throw InvalidArgument("QSeries: coefficient " + std::to_string(k) + " is beyond precision " +
                          std::to_string(precision()));
  return coeffs_[static_cast<std::size_t>(k)];
}

void QSeries::set(int k, Rational value) {
  if (k < 0 || k >= precision()) throw InvalidArgument("QSeries::set: index beyond precision");
  coeffs_[static_cast<std::size_t>(k)] = std::move(value);
}

void QSeries::mul_binomial(int k, int sign) {
  if (k < 1) throw InvalidArgument("mul_binomial: exponent must be positive");
  const int p = precision();
  for (int i = p - 1; i >= k; --i) {
    auto& dst = coeffs_[static_cast<std::size_t>(i)].raw();
    const auto& src = coeffs_[static_cast<std::size_t>(i - k)].raw();
    if (sign > 0) dst += src; else dst -= src;
  }
}

void QSeries::div_binomial(int k, int sign) {
  if (k < 1) throw InvalidArgument("div_binomial: exponent must be positive");
  const int p = precision();
  for (int i = k; i < p; ++i) {
    auto& dst = coeffs_[static_cast<std::size_t>(i)].raw();
    const auto& src = coeffs_[static_cast<std::size_t>(i - k)].raw();
    if (sign > 0) dst -= src; else dst += src;
  }
}

QSeries QSeries::shifted(int k) const {
  if (k < 0) throw InvalidArgument("QSeries::shifted: negative shift");
  QSeries out(precision() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin() + k);
  return out;
}

QSeries QSeries::truncated(int precision) const {
  if (precision > this->precision()) throw InvalidArgument("QSeries::truncated: cannot extend precision");
  return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + precision), precision);
}

namespace {

std::vector<int> support(const QSeries& s) {
  std::vector<int> idx;
  for (int i = 0; i < s.precision(); ++i)
    if (!s[i].is_zero()) idx.push_back(i);
  return idx;
}

}  // namespace

QSeries series_mul(const QSeries& a, const QSeries& b) {
  const int prec = std::min(a.precision(), b.precision());
  std::vector<int> sa = support(a), sb = support(b);
  std::vector<Rational> out(static_cast<std::size_t>(prec), Rational(0));
  mpq_class term;
  for (int i : sa) {
    if (i >= prec) break;
    for (int j : sb) {
      if (i + j >= prec) break;
      mpq_mul(term.get_mpq_t(), a[i].raw().get_mpq_t(), b[j].raw().get_mpq_t());
      auto& dst = out[static_cast<std::size_t>(i + j)].raw();
      mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), term.get_mpq_t());
    }
  }
  return QSeries(std::move(out), prec);
}

QSeries series_div(const QSeries& a, const QSeries& b) {
  if (b[0].is_zero()) throw InvalidArgument("series_div: divisor has zero constant term");
  const int prec = std::min(a.precision(), b.precision());
  std::vector<int> sb = support(b);
  const bool unit = b[0] == Rational(1);
  std::vector<Rational> c(static_cast<std::size_t>(prec), Rational(0));
  mpq_class term;
  // c_n = (a_n - sum_{k >= 1} b_k c_{n-k}) / b_0
  for (int n = 0; n < prec; ++n) {
    mpq_class acc = a[n].raw();
    for (int k : sb) {
      if (k == 0) continue;
      if (k > n) break;
      mpq_mul(term.get_mpq_t(), b[k].raw().get_mpq_t(), c[static_cast<std::size_t>(n - k)].raw().get_mpq_t());
      mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), term.get_mpq_t());
    }
    if (!unit) acc /= b[0].raw();
    c[static_cast<std::size_t>(n)].raw() = acc;
  }
  return QSeries(std::move(c), prec);
}

QSeries series_inverse(const QSeries& b) { return series_div(QSeries::one(b.precision()), b); }

QSeries euler_factor(int scale, int sign, int precision) {
  if (scale < 1) throw InvalidArgument("euler_factor: scale must be positive");
  if (sign != 1 && sign != -1) throw InvalidArgument("euler_factor: sign must be +1 or -1");
  QSeries s = QSeries::one(precision);
  for (int k = scale; k < precision; k += scale) s.mul_binomial(k, sign);
  return s;
}

QSeries scgen_coeffs(int t, int precision) {
  if (t < 1 || t % 2 == 0) throw InvalidArgument("scgen_coeffs: t must be a positive odd integer");
  QSeries s = QSeries::one(precision);
  for (int n = 1; 2 * n - 1 < precision; ++n) s.mul_binomial(2 * n - 1, +1);
  for (int n = 1; t * (2 * n - 1) < precision; ++n) s.div_binomial(t * (2 * n - 1), +1);
  for (int n = 1; 2 * t * n < precision; ++n)
    for (int e = 0; e < (t - 1) / 2; ++e) s.mul_binomial(2 * t * n, -1);
  return s;
}

EtaQuotientSpec::EtaQuotientSpec(std::vector<EtaFactor> factors) : factors_(std::move(factors)) {
  long weighted = 0;
  for (const auto& f : factors_) {
    if (f.scale < 1) throw InvalidArgument("EtaQuotientSpec: scales must be positive");
    weighted += static_cast<long>(f.scale) * f.exponent;
  }
  const Rational lead(weighted, 24);
  if (!lead.is_integer() || lead.sign() < 0)
    throw InvalidArgument("EtaQuotientSpec: net q-power " + lead.to_string() + " is not a non-negative integer");
  leading_power_ = static_cast<int>(lead.to_int64());
}

EtaQuotientSpec sc7_eta_spec() {
  return EtaQuotientSpec({{2, 2}, {14, 1}, {7, 1}, {28, 1}, {4, -1}, {1, -1}});
}

QSeries eta_quotient_coeffs(const EtaQuotientSpec& spec, int precision) {
  if (precision < 1) throw InvalidArgument("eta_quotient_coeffs: precision must be positive");
  const int lead = spec.leading_power();
  const int base = precision - lead;
  if (base < 1) return QSeries(precision);

  QSeries num = QSeries::one(base);
  for (const auto& f : spec.factors())
    for (int e = 0; e < f.exponent; ++e) num = series_mul(num, euler_factor(f.scale, -1, base));
  for (const auto& f : spec.factors())
    for (int e = 0; e < -f.exponent; ++e) num = series_div(num, euler_factor(f.scale, -1, base));
  return num.shifted(lead);
}

std::string to_json(const QSeries& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : s.coefficients()) arr.push_back(c.to_string());
  return arr.dump();
}

}  // namespace sc7
