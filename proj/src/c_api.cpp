#include "sc7/sc7.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "eisenstein.hpp"
#include "error.hpp"
#include "partitions.hpp"
#include "qseries.hpp"
#include "quadforms.hpp"
#include "routes.hpp"
#include "ternary.hpp"
#include "verify.hpp"

struct sc7_context {
  sc7::RouteEvaluator evaluator;
};

struct sc7_forms {
  std::vector<sc7::BinaryQF> forms;
};

struct sc7_series {
  sc7::QSeries series;
};

struct sc7_report {
  sc7::VerifyReport report;
  std::string summary;
};

namespace {

thread_local std::string g_last_error;

sc7_status fail(sc7_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
sc7_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return SC7_OK;
  } catch (const sc7::HypothesisViolation& e) {
    return fail(SC7_ERR_HYPOTHESIS, e.what());
  } catch (const sc7::InvalidArgument& e) {
    return fail(SC7_ERR_USAGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SC7_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SC7_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw sc7::InvalidArgument(std::string(what) + " must not be NULL");
}

}  // namespace

extern "C" {

const char* sc7_version(void) { return "1.0.0"; }

const char* sc7_last_error(void) { return g_last_error.c_str(); }

void sc7_string_free(char* s) { std::free(s); }

const char* sc7_route_name(sc7_route route) {
  switch (route) {
    case SC7_ROUTE_ENUM: return "enum";
    case SC7_ROUTE_QSERIES: return "qseries";
    case SC7_ROUTE_ETA: return "eta";
    case SC7_ROUTE_THETA: return "theta";
    case SC7_ROUTE_THEOREM: return "theorem";
    case SC7_ROUTE_COR2: return "cor2";
  }
  return nullptr;
}

sc7_status sc7_route_from_name(const char* name, sc7_route* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const auto route = sc7::parse_route(name);
    if (!route) throw sc7::InvalidArgument(std::string("unknown route '") + name + "'");
    *out = static_cast<sc7_route>(static_cast<int>(*route));
  });
}

sc7_status sc7_context_create(sc7_context** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sc7_context();
  });
}

void sc7_context_destroy(sc7_context* ctx) { delete ctx; }

sc7_status sc7_context_value(sc7_context* ctx, int64_t n, sc7_route route, char** value_out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(value_out, "value_out");
    if (sc7_route_name(route) == nullptr) throw sc7::InvalidArgument("unknown route");
    const auto r = static_cast<sc7::Route>(static_cast<int>(route));
    *value_out = dup_string(ctx->evaluator.value(n, r).to_string());
  });
}

sc7_status sc7_discriminant(int64_t n, int64_t* D_out, int* epsilon_out) {
  return guarded([&] {
    require(D_out, "D_out");
    const auto d = sc7::discriminant_of(n);
    *D_out = d.D;
    if (epsilon_out != nullptr) *epsilon_out = d.epsilon;
  });
}

sc7_status sc7_scale(int64_t n, int64_t f, char** value_out) {
  return guarded([&] {
    require(value_out, "value_out");
    *value_out = dup_string(sc7::corollary3_scale(n, f).to_string());
  });
}

sc7_status sc7_core_count(int32_t n, int32_t t, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    if (n < 0) throw sc7::InvalidArgument("n must be non-negative");
    *out = sc7::c_count(n, t);
  });
}

sc7_status sc7_hurwitz(int64_t D, char** value_out) {
  return guarded([&] {
    require(value_out, "value_out");
    *value_out = dup_string(sc7::hurwitz(D).to_string());
  });
}

sc7_status sc7_forms_create(int64_t D, sc7_forms** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sc7_forms{sc7::reduced_forms(D)};
  });
}

void sc7_forms_destroy(sc7_forms* forms) { delete forms; }

size_t sc7_forms_count(const sc7_forms* forms) { return forms == nullptr ? 0 : forms->forms.size(); }

sc7_status sc7_forms_get(const sc7_forms* forms, size_t index, int64_t* a, int64_t* b, int64_t* c) {
  return guarded([&] {
    require(forms, "forms");
    require(a, "a");
    require(b, "b");
    require(c, "c");
    if (index >= forms->forms.size()) throw sc7::InvalidArgument("form index out of range");
    const auto& f = forms->forms[index];
    *a = f.a;
    *b = f.b;
    *c = f.c;
  });
}

sc7_status sc7_series_scgen(int32_t t, int32_t precision, sc7_series** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sc7_series{sc7::scgen_coeffs(t, precision)};
  });
}

sc7_status sc7_series_eta_sc7(int32_t precision, sc7_series** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sc7_series{sc7::eta_quotient_coeffs(sc7::sc7_eta_spec(), precision)};
  });
}

sc7_status sc7_series_theta(int32_t which, int32_t precision, sc7_series** out) {
  return guarded([&] {
    require(out, "out");
    switch (which) {
      case 1: *out = new sc7_series{sc7::theta_coeffs(sc7::form_q1(), precision)}; break;
      case 2: *out = new sc7_series{sc7::theta_coeffs(sc7::form_q2(), precision)}; break;
      case 3: *out = new sc7_series{sc7::theta_coeffs(sc7::form_q3(), precision)}; break;
      default: throw sc7::InvalidArgument("theta series index must be 1, 2 or 3");
    }
  });
}

void sc7_series_destroy(sc7_series* series) { delete series; }

int32_t sc7_series_precision(const sc7_series* series) {
  return series == nullptr ? 0 : series->series.precision();
}

sc7_status sc7_series_coefficient(const sc7_series* series, int32_t k, char** value_out) {
  return guarded([&] {
    require(series, "series");
    require(value_out, "value_out");
    *value_out = dup_string(series->series[k].to_string());
  });
}

sc7_status sc7_series_to_json(const sc7_series* series, char** json_out) {
  return guarded([&] {
    require(series, "series");
    require(json_out, "json_out");
    *json_out = dup_string(sc7::to_json(series->series));
  });
}

size_t sc7_check_count(void) { return sc7::check_names().size(); }

const char* sc7_check_name(size_t index) {
  const auto& names = sc7::check_names();
  // The registry holds string literals, so data() is NUL-terminated.
  return index < names.size() ? names[index].data() : nullptr;
}

sc7_status sc7_verify(const char* check, int64_t max, sc7_report** out) {
  return guarded([&] {
    require(check, "check");
    require(out, "out");
    const std::int64_t bound = max < 0 ? sc7::default_max(check) : max;
    auto report = sc7::run_check(check, bound);
    std::string summary = report.summary();
    *out = new sc7_report{std::move(report), std::move(summary)};
  });
}

void sc7_report_destroy(sc7_report* report) { delete report; }

int sc7_report_passed(const sc7_report* report) { return report != nullptr && report->report.ok() ? 1 : 0; }

int64_t sc7_report_cases(const sc7_report* report) { return report == nullptr ? 0 : report->report.cases; }

const char* sc7_report_summary(const sc7_report* report) {
  return report == nullptr ? "" : report->summary.c_str();
}

}  // extern "C"
