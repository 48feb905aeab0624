// sc7: command-line front end over the C API in sc7/sc7.h.
//
// Exit codes: 0 ok, 1 usage error, 2 mathematical hypothesis violated,
// 3 verification counterexample found, 4 internal error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sc7/sc7.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 3;

// Thrown to unwind with a library status; main() turns it into an exit code.
struct Failure {
  sc7_status status;
  std::string message;
};

void check(sc7_status status) {
  if (status != SC7_OK) throw Failure{status, sc7_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  sc7_string_free(s);
  return out;
}

struct Context {
  sc7_context* ctx = nullptr;
  Context() { check(sc7_context_create(&ctx)); }
  ~Context() { sc7_context_destroy(ctx); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
};

sc7_route parse_route(const std::string& name) {
  sc7_route r{};
  check(sc7_route_from_name(name.c_str(), &r));
  return r;
}

struct Record {
  std::int64_t n;
  std::string route;
  std::string value;
  std::optional<std::int64_t> D;  // odd n only
  std::string H;
  std::string residue;
};

// D_n, H(-D_n) and the residue class of n, when n is odd.
void fill_extras(Record& rec) {
  if (rec.n < 1 || rec.n % 2 == 0) return;
  std::int64_t D = 0;
  check(sc7_discriminant(rec.n, &D, nullptr));
  char* h = nullptr;
  check(sc7_hurwitz(D, &h));
  rec.D = D;
  rec.H = take(h);
  rec.residue = rec.n % 4 == 1 ? "1 mod 4" : (rec.n % 8 == 3 ? "3 mod 8" : "7 mod 8");
}

std::string csv_line(const Record& r) {
  return std::to_string(r.n) + "," + r.route + "," + r.value + "," + (r.D ? std::to_string(*r.D) : "") + "," + r.H;
}

std::string json_line(const Record& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["route"] = r.route;
  j["value"] = r.value;
  nlohmann::ordered_json extras = nlohmann::ordered_json::object();
  if (r.D) {
    extras["D_n"] = *r.D;
    extras["H"] = r.H;
    extras["class"] = r.residue;
  }
  j["extras"] = extras;
  return j.dump();
}

int cmd_sc7(std::int64_t n, const std::string& route_name, const std::string& format) {
  const sc7_route route = parse_route(route_name);
  Context c;
  char* v = nullptr;
  check(sc7_context_value(c.ctx, n, route, &v));
  Record rec{n, sc7_route_name(route), take(v), std::nullopt, "", ""};
  if (format == "text") {
    std::cout << rec.value << " [" << rec.route << "]\n";
    return 0;
  }
  fill_extras(rec);
  std::cout << (format == "json" ? json_line(rec) : "n,route,value,D_n,H\n" + csv_line(rec)) << "\n";
  return 0;
}

int cmd_table(std::int64_t max, const std::vector<std::string>& route_names, const std::string& format) {
  std::vector<sc7_route> routes;
  for (const auto& name : route_names) routes.push_back(parse_route(name));
  Context c;
  if (format == "csv") std::cout << "n,route,value,D_n,H\n";
  for (std::int64_t n = 0; n <= max; ++n) {
    bool extras_done = false;
    Record base{n, "", "", std::nullopt, "", ""};
    for (sc7_route route : routes) {
      char* v = nullptr;
      const sc7_status st = sc7_context_value(c.ctx, n, route, &v);
      if (st == SC7_ERR_HYPOTHESIS) continue;  // route does not apply at this n
      check(st);
      if (!extras_done) {
        fill_extras(base);
        extras_done = true;
      }
      Record rec = base;
      rec.route = sc7_route_name(route);
      rec.value = take(v);
      std::cout << (format == "csv" ? csv_line(rec) : json_line(rec)) << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& name, std::int64_t max) {
  sc7_report* report = nullptr;
  const sc7_status st = sc7_verify(name.c_str(), max, &report);
  if (st == SC7_ERR_USAGE) {
    bool known = false;
    for (std::size_t i = 0; i < sc7_check_count(); ++i) known = known || name == sc7_check_name(i);
    if (!known) {
      std::cerr << "error: unknown check '" << name << "'. Valid checks:\n";
      for (std::size_t i = 0; i < sc7_check_count(); ++i) std::cerr << "  " << sc7_check_name(i) << "\n";
      return kExitUsage;
    }
  }
  check(st);
  const bool passed = sc7_report_passed(report) != 0;
  std::cout << sc7_report_summary(report) << "\n";
  sc7_report_destroy(report);
  return passed ? 0 : kExitCounterexample;
}

int cmd_forms(std::int64_t D, const std::string& format) {
  sc7_forms* forms = nullptr;
  check(sc7_forms_create(D, &forms));
  nlohmann::json all = nlohmann::json::array();
  for (std::size_t i = 0; i < sc7_forms_count(forms); ++i) {
    std::int64_t a = 0, b = 0, c = 0;
    check(sc7_forms_get(forms, i, &a, &b, &c));
    all.push_back({a, b, c});
  }
  sc7_forms_destroy(forms);
  if (format == "json") {
    std::cout << all.dump() << "\n";
  } else {
    for (const auto& f : all) std::cout << f.dump() << "\n";
  }
  return 0;
}

int cmd_hurwitz(std::int64_t D) {
  char* v = nullptr;
  check(sc7_hurwitz(D, &v));
  std::cout << take(v) << "\n";
  return 0;
}

int cmd_scale(std::int64_t n, std::int64_t f) {
  char* v = nullptr;
  check(sc7_scale(n, f, &v));
  std::cout << take(v) << "\n";
  return 0;
}

int cmd_series(const std::string& kind, int precision) {
  sc7_series* s = nullptr;
  if (kind == "scgen") check(sc7_series_scgen(7, precision, &s));
  else if (kind == "eta") check(sc7_series_eta_sc7(precision, &s));
  else check(sc7_series_theta(kind.back() - '0', precision, &s));
  char* json = nullptr;
  const sc7_status st = sc7_series_to_json(s, &json);
  sc7_series_destroy(s);
  check(st);
  std::cout << take(json) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-conjugate 7-core partition counts and Hurwitz class numbers"};
  app.require_subcommand(1);
  const std::vector<std::string> route_names{"enum", "qseries", "eta", "theta", "theorem", "cor2"};

  std::int64_t n = 0, max = 0, D = 0, f = 1;
  int precision = 0;
  std::string route = "qseries", format = "text", check_name, kind;
  std::vector<std::string> routes{"qseries"};

  auto* sc7 = app.add_subcommand("sc7", "sc_7(n) along one route");
  sc7->add_option("n", n, "size of the partitions")->required()->check(CLI::NonNegativeNumber);
  sc7->add_option("--route", route, "enum|qseries|eta|theta|theorem|cor2")->check(CLI::IsMember(route_names));
  sc7->add_option("--format", format, "text|csv|json")->check(CLI::IsMember({"text", "csv", "json"}));

  auto* table = app.add_subcommand("table", "sc_7(n) for 0 <= n <= max along several routes");
  table->add_option("--max", max, "largest n")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--routes", routes, "comma-separated route names")->delimiter(',');
  std::string table_format = "csv";
  table->add_option("--format", table_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  std::int64_t verify_max = -1;
  verify->add_option("--check", check_name, "check name")->required();
  verify->add_option("--max", verify_max, "upper bound of the sweep")->check(CLI::NonNegativeNumber);

  auto* forms = app.add_subcommand("forms", "reduced binary quadratic forms of discriminant -D");
  forms->add_option("D", D, "positive D with -D = 0 or 1 mod 4")->required();
  std::string forms_format = "text";
  forms->add_option("--format", forms_format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz class number H(-D)");
  hurwitz->add_option("D", D, "positive D with -D = 0 or 1 mod 4")->required();

  auto* scale = app.add_subcommand("scale", "sc_7((n + 2) f^2 - 2) from sc_7(n)");
  scale->add_option("n", n, "odd n, not 5 mod 7, -D_n fundamental")->required();
  scale->add_option("f", f, "odd f coprime to 7")->required();

  auto* series = app.add_subcommand("series", "q-expansion as a JSON array");
  series->add_option("--kind", kind, "scgen|eta|theta1|theta2|theta3")
      ->required()
      ->check(CLI::IsMember({"scgen", "eta", "theta1", "theta2", "theta3"}));
  series->add_option("--prec", precision, "number of coefficients")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    for (const auto& r : routes)
      if (std::find(route_names.begin(), route_names.end(), r) == route_names.end())
        throw Failure{SC7_ERR_USAGE, "unknown route '" + r + "'"};
    if (sc7->parsed()) return cmd_sc7(n, route, format);
    if (table->parsed()) return cmd_table(max, routes, table_format);
    if (verify->parsed()) return cmd_verify(check_name, verify_max);
    if (forms->parsed()) return cmd_forms(D, forms_format);
    if (hurwitz->parsed()) return cmd_hurwitz(D);
    if (scale->parsed()) return cmd_scale(n, f);
    if (series->parsed()) return cmd_series(kind, precision);
  } catch (const Failure& e) {
    std::cerr << "error: " << e.message << "\n";
    return static_cast<int>(e.status);
  }
  return kExitUsage;
}
