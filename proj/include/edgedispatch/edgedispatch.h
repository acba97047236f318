// Copyright 2026 The edgedispatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

/*
 * C interface to the edgedispatch library.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions return ED_OK on success or one of the ed_status codes; the
 * message of the last failure on the calling thread is available through
 * ed_last_error(). Strings returned through char** out-parameters are
 * owned by the caller and must be released with ed_string_free().
 *
 * Times cross the interface as signed 64-bit microseconds.
 */
#ifndef EDGEDISPATCH_H
#define EDGEDISPATCH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EDGEDISPATCH_BUILDING)
#    define ED_API __declspec(dllexport)
#  else
#    define ED_API __declspec(dllimport)
#  endif
#else
#  define ED_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ed_status {
  ED_OK                       = 0,
  ED_ERR_INVALID_ARGUMENT     = 1,
  ED_ERR_INVALID_SCENARIO     = 2,
  ED_ERR_IO                   = 3,
  ED_ERR_NO_ELIGIBLE          = 4,
  ED_ERR_UNKNOWN_DESTINATION  = 5,
  ED_ERR_PROTOCOL             = 6,
  ED_ERR_EMPTY_TRACE          = 7,
  ED_ERR_INTERNAL             = 8
} ed_status;

typedef enum ed_policy_kind {
  ED_POLICY_LEAST_IMPEDANCE     = 0,
  ED_POLICY_RANDOM_PROPORTIONAL = 1,
  ED_POLICY_ROUND_ROBIN         = 2
} ed_policy_kind;

typedef struct ed_scenario   ed_scenario;
typedef struct ed_run        ed_run;
typedef struct ed_dispatcher ed_dispatcher;

ED_API const char* ed_version(void);

/* Message of the last failed call on this thread, "" if none. */
ED_API const char* ed_last_error(void);

ED_API void ed_string_free(char* s);

/* ---- scenarios --------------------------------------------------------- */

/* "line" or "ring-tree". */
ED_API ed_status ed_scenario_builtin(const char* name, ed_scenario** out);
ED_API ed_status ed_scenario_load_file(const char* path, ed_scenario** out);
ED_API ed_status ed_scenario_parse(const char* json_text, ed_scenario** out);
/* Built-in name if it is one, otherwise a file path. */
ED_API ed_status ed_scenario_open(const char* name_or_path, ed_scenario** out);
ED_API void      ed_scenario_free(ed_scenario* scenario);

/* ED_OK if valid; ED_ERR_INVALID_SCENARIO with one diagnostic per line in
 * *diagnostics (may be NULL) otherwise. */
ED_API ed_status ed_scenario_validate(const ed_scenario* scenario,
                                      char**             diagnostics);

ED_API ed_status ed_scenario_set_policy(ed_scenario* scenario, ed_policy_kind kind);
/* "li", "rp" or "rr". */
ED_API ed_status ed_scenario_set_policy_name(ed_scenario* scenario, const char* name);
ED_API ed_status ed_scenario_set_seed(ed_scenario* scenario, uint64_t seed);
ED_API ed_status ed_scenario_set_duration_us(ed_scenario* scenario, int64_t duration);
ED_API ed_status ed_scenario_to_json(const ed_scenario* scenario, char** out);

/* ---- simulation runs --------------------------------------------------- */

ED_API ed_status ed_run_simulation(const ed_scenario* scenario, ed_run** out);
ED_API void      ed_run_free(ed_run* run);

ED_API ed_status ed_run_counts(const ed_run* run,
                               uint64_t*     arrivals,
                               uint64_t*     completed,
                               uint64_t*     unserved);
ED_API ed_status ed_run_write_trace(const ed_run* run, const char* path);
ED_API ed_status ed_run_trace_csv(const ed_run* run, char** out);
ED_API ed_status ed_run_write_summary(const ed_run* run, const char* path, int verbose);
ED_API ed_status ed_run_summary_json(const ed_run* run, int verbose, char** out);

/* Summary document recomputed from a trace file and the snapshot held in a
 * previously written summary (or bare snapshot) file. */
ED_API ed_status ed_summarize_files(const char* trace_path,
                                    const char* snapshot_path,
                                    int         verbose,
                                    char**      out);

/* ---- fairness analysis ------------------------------------------------- */

typedef void (*ed_suite_callback)(const char* name,
                                  int         passed,
                                  uint64_t    checks,
                                  uint64_t    violations,
                                  const char* detail,
                                  void*       user);

/* Runs the round-robin fairness property suites with the default sizes and
 * reports each through the callback. *failed receives the number of failing
 * suites. */
ED_API ed_status ed_fairness_suites(uint64_t          seed,
                                    ed_suite_callback callback,
                                    void*             user,
                                    int*              failed);

/* Round-robin schedule with frozen weights, formatted as a table. */
ED_API ed_status ed_replay_schedule(const int64_t* weights_us,
                                    size_t         count,
                                    size_t         steps,
                                    char**         out);

/* Selections needed for every deficit to reach the lcm of the weights. */
ED_API ed_status ed_convergence_step(const int64_t* weights_us,
                                     size_t         count,
                                     uint64_t*      out);

/* ---- stand-alone dispatcher -------------------------------------------- */

/* Weight table plus selection policy for one lambda at one router. */
ED_API ed_status ed_dispatcher_create(ed_policy_kind  kind,
                                      double          alpha,
                                      int64_t         backoff_min_us,
                                      uint64_t        seed,
                                      const int64_t*  destinations,
                                      size_t          count,
                                      ed_dispatcher** out);
ED_API void      ed_dispatcher_free(ed_dispatcher* dispatcher);

ED_API ed_status ed_dispatcher_select(ed_dispatcher* dispatcher,
                                      int64_t        now_us,
                                      int64_t*       destination,
                                      int*           is_probe);
ED_API ed_status ed_dispatcher_on_response(ed_dispatcher* dispatcher,
                                           int64_t        destination,
                                           int64_t        measured_us,
                                           int64_t        now_us);
ED_API ed_status ed_dispatcher_set_congested(ed_dispatcher* dispatcher,
                                             int64_t        destination,
                                             int            congested,
                                             int64_t        now_us);
/* *state: 0 never measured, 1 finite (value in *weight_us), 2 infinite. */
ED_API ed_status ed_dispatcher_weight(const ed_dispatcher* dispatcher,
                                      int64_t              destination,
                                      int*                 state,
                                      int64_t*             weight_us);

#ifdef __cplusplus
}
#endif

#endif /* EDGEDISPATCH_H */
