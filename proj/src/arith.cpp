#include "arith.hpp"

#include "error.hpp"

namespace sc7 {

Rational::Rational(std::int64_t value) : value_(0) {
  // mpq_class has no int64 constructor on every platform; go through mpz.
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
  value_ = mpq_class(z);
}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.value_ = -r.value_;
  return r;
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw InvalidArgument("Rational::to_int64: " + to_string() + " is not an integer");
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw InvalidArgument("Rational::to_int64: value out of range");
  return n.get_si();
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw InvalidArgument("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Valuation val_decompose(std::int64_t m, std::int64_t p) {
  if (m < 1) throw InvalidArgument("val_decompose: m must be positive");
  if (!is_prime(p)) throw InvalidArgument("val_decompose: " + std::to_string(p) + " is not prime");
  Valuation v{0, m};
  while (v.cofactor % p == 0) {
    v.cofactor /= p;
    ++v.exponent;
  }
  return v;
}

namespace {

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  __int128 result = 1;
  __int128 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

// p an odd prime.
int euler_criterion(std::int64_t a, std::int64_t p) {
  const std::int64_t r = mod(a, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// chi_D at a prime p.
int kronecker_at_prime(std::int64_t D, std::int64_t p) {
  if (p != 2) return euler_criterion(D, p);
  if (D % 2 == 0) return 0;
  const std::int64_t r = mod(D, 8);
  return (r == 1 || r == 7) ? 1 : -1;
}

}  // namespace

int legendre(std::int64_t a, std::int64_t p) {
  if (p == 2 || !is_prime(p)) throw InvalidArgument("legendre: modulus must be an odd prime");
  return euler_criterion(a, p);
}

int kronecker(std::int64_t D, std::int64_t n) {
  if (n < 1) throw InvalidArgument("kronecker: n must be positive");
  int result = 1;
  for (auto [p, e] : factorize(n)) {
    const int s = kronecker_at_prime(D, p);
    if (s == 0) return 0;
    if (s < 0 && (e % 2 == 1)) result = -result;
  }
  return result;
}

std::vector<int> kronecker_table(std::int64_t D, std::int64_t n) {
  if (n < 1) throw InvalidArgument("kronecker_table: n must be positive");
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<std::int64_t> smallest(size, 0);
  std::vector<int> chi(size, 0);
  chi[1] = 1;
  for (std::size_t m = 2; m < size; ++m) {
    if (smallest[m] == 0) {
      for (std::size_t k = m; k < size; k += m)
        if (smallest[k] == 0) smallest[k] = static_cast<std::int64_t>(m);
    }
    const auto p = static_cast<std::size_t>(smallest[m]);
    // Completely multiplicative: chi(m) = chi(p) chi(m / p).
    const int at_p = p == m ? kronecker_at_prime(D, static_cast<std::int64_t>(p)) : chi[p];
    chi[m] = at_p * chi[m / p];
  }
  return chi;
}

int mobius(std::int64_t n) {
  if (n < 1) throw InvalidArgument("mobius: n must be positive");
  int result = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    result = -result;
  }
  return result;
}

std::int64_t sigma1(std::int64_t n) {
  if (n < 1) throw InvalidArgument("sigma1: n must be positive");
  std::int64_t result = 1;
  for (auto [p, e] : factorize(n)) {
    std::int64_t term = 1, pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      term += pk;
    }
    result *= term;
  }
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw InvalidArgument("divisors: n must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  if (n < 0) n = -n;
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

bool is_fundamental(std::int64_t D) {
  if (D >= 0) throw InvalidArgument("is_fundamental: D must be negative");
  if (mod(D, 4) == 1) return is_squarefree(D);
  if (mod(D, 4) != 0) return false;
  std::int64_t m = D / 4;
  std::int64_t r = mod(m, 4);
  return (r == 2 || r == 3) && is_squarefree(m);
}

int unit_count(std::int64_t D) {
  if (D >= 0 || (mod(D, 4) != 0 && mod(D, 4) != 1))
    throw InvalidArgument("unit_count: " + std::to_string(D) + " is not a negative discriminant");
  // Q(sqrt(D)) depends only on the squarefree kernel of |D|.
  std::int64_t kernel = 1;
  for (auto [p, e] : factorize(-D))
    if (e % 2 == 1) kernel *= p;
  if (kernel == 1) return 4;
  if (kernel == 3) return 6;
  return 2;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw InvalidArgument("isqrt: negative argument");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), BigInt(static_cast<long>(n)).get_mpz_t());
  return r.get_si();
}

Rational pow_rational(std::int64_t base, int exponent) {
  BigInt b(static_cast<long>(base));
  BigInt p;
  unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), e);
  if (exponent >= 0) return Rational(p);
  return Rational(BigInt(1), p);
}

}  // namespace sc7
