/* Exercises the public header from plain C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "sc7/sc7.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int string_is(char* s, const char* expect) {
  int ok = s != NULL && strcmp(s, expect) == 0;
  sc7_string_free(s);
  return ok;
}

static void test_context(void) {
  sc7_context* ctx = NULL;
  char* v = NULL;
  EXPECT(sc7_context_create(&ctx) == SC7_OK);
  EXPECT(sc7_context_value(ctx, 9, SC7_ROUTE_THEOREM, &v) == SC7_OK);
  EXPECT(string_is(v, "2"));
  EXPECT(sc7_context_value(ctx, 2923, SC7_ROUTE_QSERIES, &v) == SC7_OK);
  EXPECT(string_is(v, "25"));
  EXPECT(sc7_context_value(ctx, 0, SC7_ROUTE_ENUM, &v) == SC7_OK);
  EXPECT(string_is(v, "1"));
  EXPECT(sc7_context_value(ctx, 11, SC7_ROUTE_COR2, &v) == SC7_OK);
  EXPECT(string_is(v, "1"));
  EXPECT(sc7_context_value(ctx, 25, SC7_ROUTE_THETA, &v) == SC7_OK);
  EXPECT(string_is(v, "4"));
  v = NULL;
  EXPECT(sc7_context_value(ctx, 5, SC7_ROUTE_THEOREM, &v) == SC7_ERR_HYPOTHESIS);
  EXPECT(v == NULL);
  EXPECT(strstr(sc7_last_error(), "5 mod 7") != NULL);
  EXPECT(sc7_context_value(ctx, -1, SC7_ROUTE_QSERIES, &v) == SC7_ERR_USAGE);
  EXPECT(sc7_context_value(ctx, 1, (sc7_route)42, &v) == SC7_ERR_USAGE);
  EXPECT(sc7_context_value(NULL, 1, SC7_ROUTE_QSERIES, &v) == SC7_ERR_USAGE);
  EXPECT(sc7_context_value(ctx, 1, SC7_ROUTE_QSERIES, NULL) == SC7_ERR_USAGE);
  sc7_context_destroy(ctx);
  sc7_context_destroy(NULL);
}

static void test_routes(void) {
  sc7_route r;
  EXPECT(sc7_route_from_name("eta", &r) == SC7_OK && r == SC7_ROUTE_ETA);
  EXPECT(sc7_route_from_name("nope", &r) == SC7_ERR_USAGE);
  EXPECT(strcmp(sc7_route_name(SC7_ROUTE_COR2), "cor2") == 0);
  EXPECT(sc7_route_name((sc7_route)99) == NULL);
}

static void test_scalars(void) {
  int64_t D = 0, count = 0;
  int eps = -1;
  char* v = NULL;
  EXPECT(sc7_discriminant(25, &D, &eps) == SC7_OK && D == 756 && eps == 1);
  EXPECT(sc7_discriminant(11, &D, NULL) == SC7_OK && D == 91);
  EXPECT(sc7_discriminant(4, &D, &eps) == SC7_ERR_HYPOTHESIS);
  EXPECT(sc7_hurwitz(756, &v) == SC7_OK);
  EXPECT(string_is(v, "16"));
  EXPECT(sc7_hurwitz(3, &v) == SC7_OK);
  EXPECT(string_is(v, "1/3"));
  EXPECT(sc7_hurwitz(5, &v) == SC7_ERR_HYPOTHESIS);
  EXPECT(sc7_scale(11, 15, &v) == SC7_OK);
  EXPECT(string_is(v, "25"));
  EXPECT(sc7_scale(11, 14, &v) == SC7_ERR_HYPOTHESIS);
  EXPECT(sc7_core_count(9, 7, &count) == SC7_OK && count == 16);
  EXPECT(sc7_core_count(-1, 7, &count) == SC7_ERR_USAGE);
  EXPECT(strcmp(sc7_version(), "1.0.0") == 0);
}

static void test_forms(void) {
  static const int64_t expect[8][3] = {{1, 0, 77}, {2, 2, 39}, {3, -2, 26}, {3, 2, 26},
                                       {6, -2, 13}, {6, 2, 13}, {7, 0, 11}, {9, 4, 9}};
  sc7_forms* forms = NULL;
  size_t i;
  int64_t a, b, c;
  EXPECT(sc7_forms_create(308, &forms) == SC7_OK);
  EXPECT(sc7_forms_count(forms) == 8);
  for (i = 0; i < 8 && i < sc7_forms_count(forms); ++i) {
    EXPECT(sc7_forms_get(forms, i, &a, &b, &c) == SC7_OK);
    EXPECT(a == expect[i][0] && b == expect[i][1] && c == expect[i][2]);
  }
  EXPECT(sc7_forms_get(forms, 8, &a, &b, &c) == SC7_ERR_USAGE);
  sc7_forms_destroy(forms);
  EXPECT(sc7_forms_create(6, &forms) == SC7_ERR_HYPOTHESIS);
  EXPECT(sc7_forms_count(NULL) == 0);
}

static void test_series(void) {
  sc7_series* s = NULL;
  char* v = NULL;
  EXPECT(sc7_series_scgen(7, 12, &s) == SC7_OK);
  EXPECT(sc7_series_precision(s) == 12);
  EXPECT(sc7_series_coefficient(s, 9, &v) == SC7_OK);
  EXPECT(string_is(v, "2"));
  EXPECT(sc7_series_coefficient(s, 12, &v) == SC7_ERR_USAGE);
  EXPECT(sc7_series_to_json(s, &v) == SC7_OK);
  EXPECT(string_is(v, "[\"1\",\"1\",\"0\",\"1\",\"1\",\"1\",\"1\",\"0\",\"1\",\"2\",\"1\",\"1\"]"));
  sc7_series_destroy(s);
  EXPECT(sc7_series_eta_sc7(14, &s) == SC7_OK);
  EXPECT(sc7_series_coefficient(s, 13, &v) == SC7_OK);
  EXPECT(string_is(v, "1"));
  sc7_series_destroy(s);
  EXPECT(sc7_series_theta(3, 4, &s) == SC7_OK);
  EXPECT(sc7_series_coefficient(s, 2, &v) == SC7_OK);
  EXPECT(string_is(v, "6"));
  sc7_series_destroy(s);
  EXPECT(sc7_series_theta(4, 4, &s) == SC7_ERR_USAGE);
  EXPECT(sc7_series_scgen(7, 0, &s) == SC7_ERR_USAGE);
}

static void test_verify(void) {
  sc7_report* rep = NULL;
  size_t i;
  EXPECT(sc7_check_count() == 7);
  EXPECT(sc7_check_name(7) == NULL);
  for (i = 0; i < sc7_check_count(); ++i) {
    EXPECT(sc7_verify(sc7_check_name(i), 40, &rep) == SC7_OK);
    EXPECT(sc7_report_passed(rep) == 1);
    EXPECT(sc7_report_cases(rep) > 0);
    EXPECT(strncmp(sc7_report_summary(rep), "OK ", 3) == 0);
    sc7_report_destroy(rep);
  }
  EXPECT(sc7_verify("vanishing-7mod8", -1, &rep) == SC7_OK);
  EXPECT(sc7_report_cases(rep) == 250);
  sc7_report_destroy(rep);
  EXPECT(sc7_verify("unknown", 10, &rep) == SC7_ERR_USAGE);
  EXPECT(sc7_report_passed(NULL) == 0);
}

int main(void) {
  test_context();
  test_routes();
  test_scalars();
  test_forms();
  test_series();
  test_verify();
  if (failures != 0) {
    fprintf(stderr, "%d failures\n", failures);
    return EXIT_FAILURE;
  }
  printf("c api: all checks passed\n");
  return EXIT_SUCCESS;
}
