/*
  hj-ader: C API for the ADER discontinuous Galerkin Hamilton-Jacobi
  solver library. All entry points return an hj_status; on failure a
  per-thread message is available from hj_last_error(). Solutions are
  opaque handles released with hj_solution_destroy().

  License: Apache-2.0
*/
#ifndef HJADER_H
#define HJADER_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hj_status {
  HJ_OK = 0,
  HJ_ERR_INVALID_ARGUMENT = 1,
  HJ_ERR_UNSUPPORTED_ORDER = 2,
  HJ_ERR_UNKNOWN_CASE = 3,
  HJ_ERR_ASSEMBLY = 4,
  HJ_ERR_ORACLE_FAILURE = 5,
  HJ_ERR_PREDICTOR_BLOWUP = 6,
  HJ_ERR_STEP_FAILURE = 7,
  HJ_ERR_IO = 8,
  HJ_ERR_INTERNAL = 9
} hj_status;

const char* hj_version(void);
const char* hj_status_name(hj_status s);

/* Message describing the most recent failure on this thread. */
const char* hj_last_error(void);

/* Catalog of built-in problem cases. */
int hj_case_count(void);
const char* hj_case_name(int index);

typedef struct hj_run_options {
  const char* example; /* catalog case name */
  const char* scheme;  /* "ader" or "rkdg"; NULL means "ader" */
  int degree;          /* polynomial degree k in 1..3 */
  int cells;           /* cells per direction */
  double cfl;          /* <= 0 selects the case default */
  double t_final;      /* < 0 selects the case default */
  int limiter;         /* nonzero enables the moment limiter */
} hj_run_options;

typedef struct hj_solution hj_solution;

hj_status hj_run(const hj_run_options* opts, hj_solution** out);
void hj_solution_destroy(hj_solution* s);

int hj_solution_dim(const hj_solution* s);
long hj_solution_steps(const hj_solution* s);
double hj_solution_time(const hj_solution* s);
double hj_solution_cpu_seconds(const hj_solution* s);

/* Pointwise evaluation of the numerical solution (y ignored in 1D). */
hj_status hj_solution_eval(const hj_solution* s, double x, double y, double* value);

/* Discrete errors against the case's exact-solution oracle. */
hj_status hj_solution_errors(const hj_solution* s, double* l1, double* l2, double* linf);

/* CSV dumps; 17 significant digits. */
hj_status hj_solution_write_csv(const hj_solution* s, const char* path);
hj_status hj_solution_write_diagonal_cut(const hj_solution* s, const char* path);

/* Convergence sweep over an increasing mesh list; writes the report CSV.
   On failure the completed rows are flushed with an error marker row. */
hj_status hj_sweep(const hj_run_options* opts, const int* meshes, int mesh_count,
                   const char* csv_path);

/* ADER vs RKDG CPU-time comparison, median of `repeats` (>= 3) runs. */
hj_status hj_bench(const hj_run_options* opts, int repeats, double* ader_seconds,
                   double* rkdg_seconds, double* ratio);

/* Basis/predictor table dump as CSV; path NULL or "-" writes stdout. */
hj_status hj_dump_tables(int dim, int degree, const char* path);

#ifdef __cplusplus
}
#endif

#endif
