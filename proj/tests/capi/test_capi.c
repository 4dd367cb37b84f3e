/* Exercises the public C interface from C. */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "settherm/settherm.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

#define NEAR(a, b, tol) EXPECT(fabs((a) - (b)) <= (tol))

static void test_status(void) {
  EXPECT(strlen(st_version()) > 0);
  EXPECT(strcmp(st_status_string(ST_OK), "ok") == 0);
  EXPECT(st_set_temperature(1.5, NULL) == ST_NULL_POINTER);
  double tau = 0.0;
  EXPECT(st_set_temperature(1.5, &tau) == ST_INVALID_ARGUMENT);
  EXPECT(strlen(st_last_error()) > 0);
  EXPECT(st_set_temperature(tanh(1.0), &tau) == ST_OK);
  NEAR(tau, 1.0, 1e-14);
}

static void test_spectra(void) {
  const double levels[3] = {0.2, 0.5, 0.3};
  double ips[2];
  EXPECT(st_indices_of_purity(levels, 3, ips) == ST_OK);
  NEAR(ips[0], 0.2, 1e-15);
  NEAR(ips[1], 0.4, 1e-15);

  double back[3];
  EXPECT(st_spectrum_from_ips(ips, 3, back) == ST_OK);
  NEAR(back[0], 0.5, 1e-15);
  NEAR(back[2], 0.2, 1e-15);

  const double mixed[2] = {0.5, 0.5};
  st_summary s;
  EXPECT(st_spectrum_summary(mixed, 2, &s) == ST_OK);
  EXPECT(isinf(s.tau));
  NEAR(s.entropy, log(2.0), 1e-15);

  const double bad[2] = {0.9, 0.9};
  EXPECT(st_spectrum_summary(bad, 2, &s) == ST_INVALID_ARGUMENT);
  EXPECT(st_spectrum_summary(NULL, 2, &s) == ST_NULL_POINTER);
}

static void test_matrices(void) {
  const double re[9] = {0.5, 0, 0, 0, 0.3, 0, 0, 0, 0.2};
  st_matrix* m = NULL;
  EXPECT(st_matrix_create(3, re, NULL, &m) == ST_OK);
  EXPECT(st_matrix_dimension(m) == 3);
  st_polarization pol;
  EXPECT(st_polarization_report(m, &pol) == ST_OK);
  NEAR(pol.weights[0], 0.2, 1e-12);
  NEAR(pol.weights[2], 0.6, 1e-12);
  EXPECT(pol.regularity == ST_REGULAR);
  EXPECT(strcmp(st_regularity_name(pol.regularity), "regular") == 0);
  st_matrix_free(m);

  const double not_hermitian[4] = {0.5, 0.4, 0.0, 0.5};
  EXPECT(st_matrix_create(2, not_hermitian, NULL, &m) == ST_OK);
  st_summary s;
  EXPECT(st_matrix_summary(m, &s) == ST_INVALID_INPUT);
  st_matrix_free(m);

  EXPECT(st_matrix_load("/nonexistent/rho.json", &m) == ST_INVALID_INPUT);
  st_matrix_free(NULL);
}

static void test_tables(void) {
  st_table* t = NULL;
  EXPECT(st_diagram_curves(3, 16, 1e3, &t) == ST_OK);
  EXPECT(st_table_cols(t) == 3);
  EXPECT(strcmp(st_table_column(t, 1), "tau") == 0);
  EXPECT(st_table_column(t, 3) == NULL);
  EXPECT(strncmp(st_table_label(t, 0), "block_", 6) == 0);
  double v = -1.0;
  EXPECT(st_table_value(t, 0, 0, &v) == ST_OK);
  EXPECT(st_table_value(t, st_table_rows(t), 0, &v) == ST_INVALID_ARGUMENT);

  size_t needed = 0;
  EXPECT(st_table_format_csv(t, NULL, 0, &needed) == ST_OK);
  EXPECT(needed > 1);
  char* buf = malloc(needed);
  EXPECT(st_table_format_csv(t, buf, needed - 1, &needed) == ST_INVALID_ARGUMENT);
  EXPECT(st_table_format_csv(t, buf, needed, &needed) == ST_OK);
  EXPECT(strncmp(buf, "curve_label,t,tau,entropy\n", 26) == 0);
  EXPECT(strlen(buf) + 1 == needed);
  free(buf);

  EXPECT(st_table_write_csv(t, "/nonexistent/dir/out.csv") == ST_IO);
  st_table_free(t);

  EXPECT(st_diagram_cusps(4, &t) == ST_OK);
  EXPECT(st_table_rows(t) == 2);
  st_table_free(t);

  int contained = 0, extrapolated = 0;
  EXPECT(st_envelope_contains(3, 1.0, log(3.0), 1e-6, &contained, &extrapolated) == ST_OK);
  EXPECT(!contained);
}

static void test_models(void) {
  st_chain_diagnostics diag;
  EXPECT(st_heisenberg_diagnostics(3, &diag) == ST_OK);
  EXPECT(diag.ground_degeneracy == 2);
  EXPECT(diag.has_plateau);
  NEAR(diag.plateau_numeric, 1.2764, 1e-4);
  EXPECT(st_heisenberg_diagnostics(10, &diag) == ST_INVALID_ARGUMENT);

  const double energies[2] = {0.0, 3.86};
  st_table* a = NULL;
  st_table* b = NULL;
  EXPECT(st_ergotropy_scatter(energies, 2, 100, 9, 0.5, &a) == ST_OK);
  EXPECT(st_ergotropy_scatter(energies, 2, 100, 9, 0.5, &b) == ST_OK);
  EXPECT(st_table_rows(a) == 100);
  for (size_t r = 0; r < 100; ++r) {
    for (size_t c = 0; c < 5; ++c) {
      double x, y;
      st_table_value(a, r, c, &x);
      st_table_value(b, r, c, &y);
      EXPECT(memcmp(&x, &y, sizeof x) == 0);
    }
  }
  st_table_free(a);
  st_table_free(b);

  const double degenerate[2] = {1.0, 1.0};
  EXPECT(st_ergotropy_scatter(degenerate, 2, 10, 1, 0.5, &a) == ST_INVALID_ARGUMENT);

  const double levels[3] = {0.0, 0.5, 1.0};
  EXPECT(st_thirdlaw_sweep(3, levels, 3, &a) == ST_OK);
  EXPECT(st_table_rows(a) == 6);
  st_table_free(a);
}

int main(void) {
  test_status();
  test_spectra();
  test_matrices();
  test_tables();
  test_models();
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("all C API checks passed\n");
  return 0;
}
