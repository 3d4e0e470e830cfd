// SPDX-License-Identifier: Apache-2.0
//
// tvwsplan - coverage, sizing and energy-efficiency planner for TVWS and LTE
// networks.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TVWSPLAN_H
#define TVWSPLAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TVWS_API __declspec(dllexport)
#else
#define TVWS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tvws_status {
    TVWS_OK = 0,
    TVWS_ERR_INVALID_ARGUMENT = 1,
    TVWS_ERR_DOMAIN = 2,
    TVWS_ERR_CONFIG = 3,
    TVWS_ERR_IO = 4,
    TVWS_ERR_PLANNING = 5,
    TVWS_ERR_INTERNAL = 6
} tvws_status;

/* A loaded scenario plus one selected technology and run options. */
typedef struct tvws_session tvws_session;

/* Result of a planning campaign. */
typedef struct tvws_report tvws_report;

TVWS_API const char* tvws_version(void);
TVWS_API const char* tvws_status_name(tvws_status status);

/* $TVWSPLAN_DATA_DIR when set, else the data directory chosen at build time. */
TVWS_API const char* tvws_default_data_dir(void);

/*
 * Message of the last failed call on this thread, or "" after a success.
 * tvws_last_error_json returns the same failure as one JSON object:
 * {"status": ..., "message": ..., "source": ..., "fields": [{"path", "message"}]}.
 */
TVWS_API const char* tvws_last_error(void);
TVWS_API const char* tvws_last_error_json(void);

/* Strings returned through char** out-parameters must be released here. */
TVWS_API void tvws_string_free(char* text);

/* data_dir may be NULL for the built-in default or $TVWSPLAN_DATA_DIR. */
TVWS_API tvws_status tvws_session_open(const char* scenario_path, const char* data_dir, tvws_session** out);
TVWS_API void tvws_session_close(tvws_session* session);

/* Limits subsequent calls to "suburban" or "rural"; overrides the scenario's choice. */
TVWS_API tvws_status tvws_session_set_environment(tvws_session* session, const char* environment);
/* Default: the scenario's "technology" entry. */
TVWS_API tvws_status tvws_session_set_technology(tvws_session* session, const char* name);
TVWS_API tvws_status tvws_session_set_mimo(tvws_session* session, int enable_4x4);
TVWS_API tvws_status tvws_session_set_runs(tvws_session* session, int runs);
TVWS_API tvws_status tvws_session_set_seed(tvws_session* session, uint64_t base_seed);
/* NULL or "" selects the sweep optimum. */
TVWS_API tvws_status tvws_session_set_mcs(tvws_session* session, const char* label);
/* 0 restores the default ($TVWSPLAN_WORKERS, else hardware concurrency). */
TVWS_API tvws_status tvws_session_set_workers(tvws_session* session, int workers);
/* -1 follows the scenario, 0 disables, 1 enables lattice growth. */
TVWS_API tvws_status tvws_session_set_growth(tvws_session* session, int mode);

/* CSV tables with a leading "# key: value" provenance block. */
TVWS_API tvws_status tvws_pathloss_csv(const tvws_session* session, double d_min_km, double d_max_km, int points,
                                       char** out_csv);
TVWS_API tvws_status tvws_coverage_csv(const tvws_session* session, char** out_csv);
TVWS_API tvws_status tvws_sweep_csv(const tvws_session* session, char** out_csv);

TVWS_API tvws_status tvws_plan(const tvws_session* session, tvws_report** out);
TVWS_API void tvws_report_free(tvws_report* report);
TVWS_API tvws_status tvws_report_json(const tvws_report* report, char** out_json);
/* Writes report.json, runs.csv, progressive.csv and the run-0 deployment files. */
TVWS_API tvws_status tvws_report_write(const tvws_report* report, const char* out_dir);

/*
 * Named aggregate: "coverage_mean", "coverage_stddev", "coverage_sem",
 * "power_w_mean", "power_w_stddev", "ee_mean", "ee_stddev", "active_sites_mean",
 * "candidate_sites", "range_km", "pl_max_db", "runs".
 */
TVWS_API tvws_status tvws_report_metric(const tvws_report* report, const char* name, double* out_value);
/* Checker verdict over every run; violations land in tvws_last_error. */
TVWS_API tvws_status tvws_report_check(const tvws_report* report);

/* Re-derives shipped calibrated coefficients; JSON array of results. */
TVWS_API tvws_status tvws_calibrate(const char* data_dir, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
