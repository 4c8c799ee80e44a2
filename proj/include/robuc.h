/* SPDX-License-Identifier: Apache-2.0 */
#ifndef ROBUC_H
#define ROBUC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Robust unit-commitment toolkit: C interface to the shared library.
 *
 * All functions return a status code; constructed objects come back through
 * out-parameters as opaque handles that the caller frees.  On any nonzero
 * status robuc_last_error() describes the failure (thread-local buffer,
 * valid until the next call on the same thread). */

#define ROBUC_OK 0
#define ROBUC_ERR_PARSE 2      /* unreadable file / invalid configuration */
#define ROBUC_ERR_INFEASIBLE 3 /* model proven infeasible */
#define ROBUC_ERR_BACKEND 4    /* requested solver backend unavailable */
#define ROBUC_ERR_LIMIT 5      /* iteration/time limit before certification */

typedef struct robuc_system robuc_system;
typedef struct robuc_set robuc_set;
typedef struct robuc_solution robuc_solution;
typedef struct robuc_report robuc_report;

const char* robuc_version(void);
const char* robuc_last_error(void);

/* ---- power system ---- */
int robuc_system_read(const char* path, robuc_system** out);
void robuc_system_free(robuc_system* sys);
int robuc_system_horizon(const robuc_system* sys);
int robuc_system_num_gen(const robuc_system* sys);
int robuc_system_num_ren(const robuc_system* sys);

/* ---- uncertainty set ---- */
int robuc_set_read(const char* path, robuc_set** out);
int robuc_set_write(const char* path, const robuc_set* set);
void robuc_set_free(robuc_set* set);
double robuc_set_gamma(const robuc_set* set);
/* Returns a copy with a different budget, for sweeping a gamma grid. */
int robuc_set_with_gamma(const robuc_set* set, double gamma, robuc_set** out);
/* Returns the set's static counterpart: dynamics dropped, identity factor
 * loading, full budget share, same bounds and gamma. */
int robuc_set_make_static(const robuc_set* set, robuc_set** out);

/* Fits the seasonal + lagged-recursion model to a renewable time-series
 * file and builds the uncertainty set, with per-unit bounds taken from the
 * system's renewable capacities.  norm is "linf", "l1" or "l1linf";
 * captured_variance (may be NULL) receives the factor-truncation share. */
int robuc_estimate(const robuc_system* sys, const char* series_path,
                   int period_cycle, int lags, int factors, double gamma,
                   double rho, const char* norm, robuc_set** out,
                   double* captured_variance);

/* ---- day-ahead solves ---- */
typedef struct {
    double gap;            /* relative MIP gap, default 0.01 */
    double eps_viol;       /* separation violation tolerance */
    int screening;         /* 1: interval screening before separation LPs */
    int oa;                /* 1: dualized outer approximation in the master */
    int one_tree;          /* 1: lazy cuts in a single tree */
    int exact_dual;        /* 1: monolithic dual reformulation, no cut loop */
    int max_iterations;
    double time_limit;     /* seconds, 0 = none */
    int threads;
} robuc_uc_options;

void robuc_uc_options_init(robuc_uc_options* opts);

int robuc_solve_uc(const robuc_system* sys, const robuc_set* set,
                   const robuc_uc_options* opts, robuc_solution** out);

/* Deterministic baseline: forecast-based commitment with reserve margins
 * reserve_gamma times the sampled net-load standard deviation (samples
 * trajectories drawn from the set's recursion with the given seed). */
int robuc_solve_det_uc(const robuc_system* sys, const robuc_set* set,
                       double reserve_gamma, int samples,
                       unsigned long long seed, robuc_solution** out);

int robuc_solution_read(const char* path, robuc_solution** out);
int robuc_solution_write(const char* path, const robuc_solution* sol);
void robuc_solution_free(robuc_solution* sol);
double robuc_solution_objective(const robuc_solution* sol);
double robuc_solution_worst_case_cost(const robuc_solution* sol);
double robuc_solution_commitment_cost(const robuc_solution* sol);
int robuc_solution_certified(const robuc_solution* sol);
/* Returns the number of warnings; fills buf (if non-NULL) with warning k. */
int robuc_solution_warning(const robuc_solution* sol, int k, char* buf,
                           size_t cap);

/* ---- rolling-horizon simulation ---- */
typedef struct {
    int trajectories;           /* default 100 */
    unsigned long long seed;
    const char* engine;         /* "policy-guided", "policy-enforcement",
                                   "deterministic" */
    int lookahead;              /* forecast periods beyond t, default 3 */
    double penalty_price;       /* $/MWh, default 5000 */
    int threads;
} robuc_sim_options;

void robuc_sim_options_init(robuc_sim_options* opts);

int robuc_simulate(const robuc_system* sys, const robuc_solution* sol,
                   const robuc_set* set, const robuc_sim_options* opts,
                   robuc_report** out);

int robuc_report_read(const char* path, robuc_report** out);
int robuc_report_write(const char* path, const robuc_report* report);
void robuc_report_free(robuc_report* report);
/* name: cost_avg, cost_std, cost_cvar, penalty_cost_avg, penalty_freq,
 * renewables_util, stored_avg, commitment_cost, completed, partial.
 * Unknown names return NaN. */
double robuc_report_metric(const robuc_report* report, const char* name);
/* Plain-text metric table; returns the length it wanted (snprintf style). */
int robuc_report_summary(const robuc_report* report, char* buf, size_t cap);

#ifdef __cplusplus
}
#endif

#endif /* ROBUC_H */
