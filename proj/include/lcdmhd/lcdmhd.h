#ifndef LCDMHD_H
#define LCDMHD_H

/*
 * C interface of the lcdmhd solver library.
 *
 * Every function returning lcdmhd_status leaves a human-readable message
 * for the calling thread in lcdmhd_last_error() when it fails.
 */

#include <stddef.h>

#if defined(_WIN32)
#if defined(LCDMHD_BUILDING_LIBRARY)
#define LCDMHD_API __declspec(dllexport)
#else
#define LCDMHD_API __declspec(dllimport)
#endif
#else
#define LCDMHD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lcdmhd_status {
  LCDMHD_OK = 0,
  LCDMHD_ERR_INVALID_ARGUMENT = 1,
  LCDMHD_ERR_CONFIG = 2,
  LCDMHD_ERR_ADMISSIBILITY = 3,
  LCDMHD_ERR_UNSTABLE = 4,
  LCDMHD_ERR_IO = 5,
  LCDMHD_ERR_INTERNAL = 6
} lcdmhd_status;

typedef struct lcdmhd_sim lcdmhd_sim;

/* Zero / NULL fields mean "use the problem's default". */
typedef struct lcdmhd_run_config {
  const char* problem; /* brio_wu, alfven, orszag_tang, rotor, blast */
  const char* scheme;  /* lcd-pccu (default), pccu, lcd-pccu-uncorrected */
  int nx;
  int ny;
  double theta;
  double cfl; /* default 0.25 */
  double eps; /* default 1e-8 */
  int floor;  /* nonzero: clamp rho, p >= 1e-12 instead of failing */
} lcdmhd_run_config;

typedef struct lcdmhd_convergence_row {
  int mesh;
  double error_u;
  double rate_u;
  double error_b3;
  double rate_b3;
} lcdmhd_convergence_row;

LCDMHD_API void lcdmhd_run_config_init(lcdmhd_run_config* cfg);

LCDMHD_API const char* lcdmhd_last_error(void);
LCDMHD_API const char* lcdmhd_status_name(lcdmhd_status s);

/* n <= 0 reads LCDMHD_NUM_THREADS, falling back to the OpenMP default.
 * Returns the worker count now in effect. */
LCDMHD_API int lcdmhd_set_num_threads(int n);

LCDMHD_API int lcdmhd_problem_count(void);
LCDMHD_API const char* lcdmhd_problem_name(int i);
LCDMHD_API lcdmhd_status lcdmhd_problem_t_final(const char* problem,
                                                double* t_final);

LCDMHD_API lcdmhd_status lcdmhd_sim_create(const lcdmhd_run_config* cfg,
                                           lcdmhd_sim** out);
LCDMHD_API void lcdmhd_sim_destroy(lcdmhd_sim* sim);

/* Steps to time t exactly. On failure the simulation keeps the state of the
 * last completed step. */
LCDMHD_API lcdmhd_status lcdmhd_sim_advance_to(lcdmhd_sim* sim, double t);

LCDMHD_API lcdmhd_status lcdmhd_sim_time(const lcdmhd_sim* sim, double* t);
LCDMHD_API lcdmhd_status lcdmhd_sim_steps(const lcdmhd_sim* sim, long* steps);
LCDMHD_API lcdmhd_status lcdmhd_sim_dims(const lcdmhd_sim* sim, int* nx,
                                         int* ny);
LCDMHD_API lcdmhd_status lcdmhd_sim_mass(const lcdmhd_sim* sim, double* mass);

/* Copies one variable (rho u v w p b1 b2 b3 E A B) of every interior cell,
 * row-major with x fastest; n must be at least nx*ny. */
LCDMHD_API lcdmhd_status lcdmhd_sim_get_field(const lcdmhd_sim* sim,
                                              const char* var, double* out,
                                              size_t n);

/* Evaluates the discrete divergence at the current state (also appends a
 * diagnostics sample). */
LCDMHD_API lcdmhd_status lcdmhd_sim_divergence_norms(lcdmhd_sim* sim,
                                                     double* l1, double* linf);

LCDMHD_API lcdmhd_status lcdmhd_sim_write_dump(const lcdmhd_sim* sim,
                                               const char* path);
LCDMHD_API lcdmhd_status lcdmhd_sim_write_diagnostics_csv(
    const lcdmhd_sim* sim, const char* path);

/* Alfven refinement study on n_meshes square meshes; rows may be NULL,
 * out_csv may be NULL. */
LCDMHD_API lcdmhd_status lcdmhd_convergence(const char* problem,
                                            const char* scheme,
                                            const int* meshes, int n_meshes,
                                            double t_final, double cfl,
                                            lcdmhd_convergence_row* rows,
                                            const char* out_csv);

/* vars: comma-separated names from the dump record. */
LCDMHD_API lcdmhd_status lcdmhd_slice(const char* dump_path, char axis,
                                      double at, const char* vars,
                                      const char* out_csv);

#ifdef __cplusplus
}
#endif

#endif /* LCDMHD_H */
