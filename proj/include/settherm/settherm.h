/* C interface to the settherm library.
 *
 * Every function returns an st_status. On failure a message describing the
 * problem is available from st_last_error() on the same thread until the
 * next call into the library. Tables and matrices are opaque handles owned
 * by the caller and released with st_table_free / st_matrix_free.
 */
#ifndef SETTHERM_H
#define SETTHERM_H

#include <stddef.h>
#include <stdint.h>

#if defined(SETTHERM_BUILDING_LIBRARY)
#define ST_API __attribute__((visibility("default")))
#else
#define ST_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum st_status {
  ST_OK = 0,
  ST_INVALID_ARGUMENT = 1, /* parameter out of domain */
  ST_INVALID_INPUT = 2,    /* external data failed validation */
  ST_NUMERICAL = 3,        /* internal numerical failure */
  ST_IO = 4,               /* file could not be read or written */
  ST_NULL_POINTER = 5
} st_status;

ST_API const char* st_version(void);
ST_API const char* st_status_string(st_status s);
ST_API const char* st_last_error(void);

/* 0 restores the default (SET_THERMO_THREADS, else hardware concurrency). */
ST_API st_status st_set_thread_limit(size_t n);

/* ---- tables ------------------------------------------------------------ */

typedef struct st_table st_table;

ST_API void st_table_free(st_table* t);
ST_API size_t st_table_rows(const st_table* t);
ST_API size_t st_table_cols(const st_table* t);
/* Column name, or NULL when out of range. */
ST_API const char* st_table_column(const st_table* t, size_t col);
/* Text label of a row; NULL when the table has no label column. */
ST_API const char* st_table_label(const st_table* t, size_t row);
ST_API st_status st_table_value(const st_table* t, size_t row, size_t col, double* out);
/* Serialises into buf (NUL-terminated). *needed receives the full length
 * including the terminator; pass buf = NULL, cap = 0 to query it. Returns
 * ST_INVALID_ARGUMENT if cap is too small. */
ST_API st_status st_table_format_csv(const st_table* t, char* buf, size_t cap, size_t* needed);
ST_API st_status st_table_format_json(const st_table* t, char* buf, size_t cap, size_t* needed);
ST_API st_status st_table_write_csv(const st_table* t, const char* path);
ST_API st_status st_table_write_json(const st_table* t, const char* path);

/* Writes several tables as one JSON object {name: table, ...}. */
ST_API st_status st_tables_write_json(const st_table* const* tables, const char* const* names, size_t count,
                                      const char* path);

/* ---- spectra ----------------------------------------------------------- */

typedef struct st_summary {
  size_t dimension;
  double gamma;             /* Tr(rho^2) */
  double p_global;          /* degree of purity */
  double p_pairwise;        /* max(0, 2 lambda_1 - 1) */
  double tau;               /* SET, +inf when maximally mixed */
  double beta;              /* inverse SET, +inf when pure */
  double entropy;           /* von Neumann entropy */
  double bipartite_entropy; /* binary entropy of p_pairwise */
} st_summary;

/* `spectrum` holds d probabilities in any order. */
ST_API st_status st_spectrum_summary(const double* spectrum, size_t d, st_summary* out);
/* Writes d-1 indices of purity. */
ST_API st_status st_indices_of_purity(const double* spectrum, size_t d, double* ips_out);
/* Reads d-1 indices, writes d descending eigenvalues. */
ST_API st_status st_spectrum_from_ips(const double* ips, size_t d, double* spectrum_out);
ST_API st_status st_set_temperature(double p_d, double* tau_out);

/* ---- matrices ---------------------------------------------------------- */

typedef struct st_matrix st_matrix;

/* JSON file {"d": n, "re": [[...]], "im": [[...]]}. */
ST_API st_status st_matrix_load(const char* path, st_matrix** out);
/* Row-major d*d real and imaginary parts; `im` may be NULL. */
ST_API st_status st_matrix_create(size_t d, const double* re, const double* im, st_matrix** out);
ST_API void st_matrix_free(st_matrix* m);
ST_API size_t st_matrix_dimension(const st_matrix* m);

/* Validates the matrix as a density matrix; failures are ST_INVALID_INPUT. */
ST_API st_status st_matrix_summary(const st_matrix* m, st_summary* out);

typedef enum st_regularity {
  ST_REGULAR = 0,
  ST_NONREGULAR = 1,
  ST_NO_DISCRIMINATING_COMPONENT = 2
} st_regularity;

typedef struct st_polarization {
  double weights[3]; /* P1, P2 - P1, 1 - P2 */
  int real_rank;     /* rank of Re(rho_m) */
  int borderline;    /* a singular value close to the rank threshold */
  st_regularity regularity;
} st_polarization;

/* 3x3 density matrices only. */
ST_API st_status st_polarization_report(const st_matrix* m, st_polarization* out);
ST_API const char* st_regularity_name(st_regularity r);

/* ---- entropy-SET diagrams ---------------------------------------------- */

/* Columns t, tau, entropy with label column curve_label. */
ST_API st_status st_diagram_curves(size_t d, size_t resolution, double tau_max, st_table** out);
/* Columns k, tau, entropy. */
ST_API st_status st_diagram_cusps(size_t d, st_table** out);
/* Columns tau, entropy, P1 .. P(d-1). */
ST_API st_status st_diagram_cloud(size_t d, size_t count, uint64_t seed, st_table** out);
/* Columns zeta, tau, entropy. alphas may be NULL for (0, 1, ..., d-1). */
ST_API st_status st_psa_path(size_t d, const double* alphas, size_t points, st_table** out);
/* Columns T, entropy, tau. */
ST_API st_status st_thermal_curve(const double* energies, size_t d, const double* temperatures, size_t n,
                                  st_table** out);
ST_API st_status st_envelope_contains(size_t d, double tau, double entropy, double tol, int* contained,
                                      int* extrapolated);

/* ---- Heisenberg chains ------------------------------------------------- */

typedef struct st_chain_diagnostics {
  int length;
  size_t dimension;
  double ground_energy;
  size_t ground_degeneracy;
  double variance;
  double variance_theory;
  double slope_fit;
  double slope_theory;
  int has_plateau;
  double plateau_numeric;
  double plateau_theory;
} st_chain_diagnostics;

/* Columns T, tau, entropy. */
ST_API st_status st_heisenberg_curve(int length, const double* temperatures, size_t n, st_table** out);
ST_API st_status st_heisenberg_diagnostics(int length, st_chain_diagnostics* out);

/* ---- ergotropy --------------------------------------------------------- */

/* Diagonal nondegenerate H = diag(energies). Columns
 * lambda_max, work, entropy, tau, coherence. */
ST_API st_status st_ergotropy_scatter(const double* energies, size_t d, size_t count, uint64_t seed,
                                      double ginibre_fraction, st_table** out);
/* Columns p_e, lambda1, work, entropy, tau; eps_top is the largest energy
 * above the ground level. */
ST_API st_status st_ergotropy_bound(const double* energies, size_t d, size_t points, st_table** out);

/* ---- third law --------------------------------------------------------- */

/* Columns P1 .. P(d-1), p_d, beta, diverging (0 or 1). */
ST_API st_status st_thirdlaw_sweep(size_t d, const double* levels, size_t n_levels, st_table** out);

#ifdef __cplusplus
}
#endif

#endif /* SETTHERM_H */
