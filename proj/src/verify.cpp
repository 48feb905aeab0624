#include "verify.hpp"

#include <functional>

#include "eisenstein.hpp"
#include "error.hpp"
#include "qseries.hpp"
#include "quadforms.hpp"
#include "routes.hpp"
#include "ternary.hpp"

namespace sc7 {

std::string VerifyReport::summary() const {
  if (ok()) return "OK " + std::to_string(cases) + " cases";
  return "FAIL " + check + " at " + failure->where + ": lhs=" + failure->lhs + " rhs=" + failure->rhs;
}

namespace {

using Check = std::function<VerifyReport(std::int64_t)>;

Counterexample mismatch(std::string where, const std::string& lhs_label, const Rational& lhs,
                        const std::string& rhs_label, const Rational& rhs) {
  return {std::move(where), lhs_label + "=" + lhs.to_string(), rhs_label + "=" + rhs.to_string()};
}

std::vector<Rational> qseries_upto(std::int64_t max) {
  return scgen_coeffs(7, static_cast<int>(max) + 1).coefficients();
}

VerifyReport route_equivalence(std::int64_t max) {
  VerifyReport rep{"route-equivalence", 0, std::nullopt};
  RouteEvaluator eval;
  for (std::int64_t n = 0; n <= max; ++n) {
    const Rational reference = eval.value(n, Route::qseries);
    for (Route r : kAllRoutes) {
      if (r == Route::qseries || RouteEvaluator::not_applicable(n, r)) continue;
      const Rational v = eval.value(n, r);
      if (v != reference) {
        rep.failure = mismatch("n=" + std::to_string(n), std::string(route_name(r)), v, "qseries", reference);
        return rep;
      }
    }
    ++rep.cases;
  }
  return rep;
}

VerifyReport vanishing(std::int64_t max) {
  VerifyReport rep{"vanishing-7mod8", 0, std::nullopt};
  const auto sc = qseries_upto(max);
  for (std::int64_t n = 7; n <= max; n += 8) {
    if (!sc[static_cast<std::size_t>(n)].is_zero()) {
      rep.failure = mismatch("n=" + std::to_string(n), "qseries", sc[static_cast<std::size_t>(n)], "expected", 0);
      return rep;
    }
    ++rep.cases;
  }
  return rep;
}

VerifyReport theta_identity(std::int64_t max) {
  VerifyReport rep{"theta-identity", 0, std::nullopt};
  const auto sc = qseries_upto(max);
  const auto theta = sc7_from_thetas_upto(static_cast<int>(max));
  for (std::int64_t n = 0; n <= max; ++n) {
    const auto& t = theta[static_cast<std::size_t>(n)];
    const auto& q = sc[static_cast<std::size_t>(n)];
    if (!t.is_integer() || t != q) {
      rep.failure = mismatch("n=" + std::to_string(n), "theta", t, "qseries", q);
      return rep;
    }
    ++rep.cases;
  }
  return rep;
}

std::vector<QSeries> thetas(std::int64_t max) {
  const int prec = static_cast<int>(max) + 1;
  return {theta_coeffs(form_q1(), prec), theta_coeffs(form_q2(), prec), theta_coeffs(form_q3(), prec)};
}

VerifyReport closed_tables(std::int64_t max) {
  VerifyReport rep{"closed-R-tables", 0, std::nullopt};
  const auto th = thetas(max);
  for (std::int64_t m = 3; m <= max; m += 2) {
    if (m % 7 == 0) continue;
    for (int i = 1; i <= 3; ++i) {
      const Rational closed = closed_R(i, m);
      const Rational& lattice = th[static_cast<std::size_t>(i - 1)][static_cast<int>(m)];
      if (closed != lattice) {
        rep.failure = mismatch("i=" + std::to_string(i) + ",m=" + std::to_string(m), "closed_R", closed, "rep_count",
                               lattice);
        return rep;
      }
    }
    ++rep.cases;
  }
  return rep;
}

VerifyReport g_basis(std::int64_t max) {
  VerifyReport rep{"g-basis", 0, std::nullopt};
  const auto th = thetas(max);
  for (std::int64_t m = 1; m <= max; ++m) {
    if (m % 2 == 0 || m % 7 == 0) continue;
    for (int i = 1; i <= 3; ++i) {
      const Rational rebuilt = theta_from_basis(i, m, AlphaConvention::effective);
      const Rational& lattice = th[static_cast<std::size_t>(i - 1)][static_cast<int>(m)];
      if (rebuilt != lattice) {
        rep.failure = mismatch("i=" + std::to_string(i) + ",m=" + std::to_string(m), "g_basis", rebuilt,
                               "rep_count", lattice);
        return rep;
      }
    }
    ++rep.cases;
  }
  return rep;
}

VerifyReport cohen_scaling(std::int64_t max) {
  VerifyReport rep{"cohen-scaling", 0, std::nullopt};
  for (std::int64_t D = 3; D <= max; ++D) {
    if (!is_negative_discriminant(D) || !is_fundamental(-D)) continue;
    for (std::int64_t f = 1; f <= 15; f += 2) {
      if (f % 7 == 0) continue;
      const Rational scaled = cohen_scaled_H(D, f).value();
      const Rational direct = hurwitz(D * f * f).value();
      if (scaled != direct) {
        rep.failure = mismatch("D=" + std::to_string(D) + ",f=" + std::to_string(f), "cohen", scaled, "hurwitz",
                               direct);
        return rep;
      }
      ++rep.cases;
    }
  }
  return rep;
}

VerifyReport dirichlet_vs_forms(std::int64_t max) {
  VerifyReport rep{"dirichlet-vs-forms", 0, std::nullopt};
  for (std::int64_t D = 3; D <= max; ++D) {
    if (!is_negative_discriminant(D) || !is_fundamental(-D)) continue;
    const Rational sum_route = dirichlet_H(D).value();
    const Rational forms_route = hurwitz(D).value();
    if (sum_route != forms_route) {
      rep.failure = mismatch("D=" + std::to_string(D), "dirichlet", sum_route, "hurwitz", forms_route);
      return rep;
    }
    ++rep.cases;
  }
  return rep;
}

struct CheckEntry {
  std::string_view name;
  std::int64_t default_max;
  Check run;
};

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries = {
      {"route-equivalence", 300, route_equivalence},
      {"vanishing-7mod8", 2000, vanishing},
      {"theta-identity", 498, theta_identity},
      {"closed-R-tables", 301, closed_tables},
      {"g-basis", 301, g_basis},
      {"cohen-scaling", 500, cohen_scaling},
      {"dirichlet-vs-forms", 2000, dirichlet_vs_forms},
  };
  return entries;
}

const CheckEntry& find(std::string_view name) {
  for (const auto& e : registry())
    if (e.name == name) return e;
  throw InvalidArgument("unknown check '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string_view>& check_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

std::int64_t default_max(std::string_view check) { return find(check).default_max; }

VerifyReport run_check(std::string_view check, std::int64_t max) {
  const auto& entry = find(check);
  if (max < 0) throw InvalidArgument("verify: --max must be non-negative");
  return entry.run(max);
}

}  // namespace sc7
