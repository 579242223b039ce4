#ifndef DRACO_H
#define DRACO_H

/* C API for the draco analytical cost model. All functions return a
 * draco_status; out-parameters are written only on DRACO_OK. Strings
 * returned through char** are heap-allocated; free with draco_string_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DRACO_API __declspec(dllexport)
#else
#define DRACO_API __attribute__((visibility("default")))
#endif

typedef enum draco_status {
  DRACO_OK = 0,
  DRACO_EINVAL = 1, /* bad argument / usage */
  DRACO_EMODEL = 2, /* model/domain error (divisibility, coverage, ...) */
  DRACO_EIO = 3     /* parse or serialization failure */
} draco_status;

typedef struct draco_network draco_network; /* opaque */

/* Array/cost-model knobs. Zero-initialized fields take the documented
 * defaults (preset 16 -> 16x16 etc.; see draco_defaults_json). */
typedef struct draco_array_opts {
  int preset;                   /* 16, 32, 64 or 128 (required) */
  int mem_mult;                 /* 0/1 = as-is, 2 = doubled on-chip memory */
  double clock_hz;              /* 0 = 200e6 */
  double dram_bytes_per_cycle;  /* 0 = 512 */
  int word_bytes;               /* 0 = 2 */
  double alu_pj;                /* 0 = 4.0 */
} draco_array_opts;

typedef struct draco_network_summary {
  long long macs;
  long long params;
  double avg_utilization;
  double util_3x3;
  double util_1x1;
  double latency_ms;
  double energy_mj;
} draco_network_summary;

/* Thread-local message for the last failing call in this thread. */
DRACO_API const char* draco_last_error(void);

DRACO_API draco_status draco_mobilenet_v1(double alpha, double rho, int g,
                                          draco_network** out);
DRACO_API draco_status draco_network_from_json(const char* json_text,
                                               draco_network** out);
DRACO_API draco_status draco_network_to_json(const draco_network* net,
                                             char** out_json);
DRACO_API draco_status draco_apply_group_size(const draco_network* net, int g,
                                              draco_network** out);
DRACO_API draco_status draco_network_counts(const draco_network* net,
                                            long long* out_macs,
                                            long long* out_params);

/* Per-layer counts report (CSV). */
DRACO_API draco_status draco_counts_csv(const draco_network* net, char** out_csv);

/* Whole-network cost summary on one array. */
DRACO_API draco_status draco_network_cost(const draco_network* net,
                                          const draco_array_opts* opts,
                                          draco_network_summary* out);

/* Full analysis: mapping CSV + per-layer cost CSV + aggregate JSON
 * (config echo included). Any out pointer may be NULL to skip it. */
DRACO_API draco_status draco_analyze(const draco_network* net,
                                     const draco_array_opts* opts,
                                     char** out_mapping_csv,
                                     char** out_cost_csv,
                                     char** out_aggregate_json);

/* Sweep the grid (comma-separated lists, e.g. "16,32,64,128", "1,2,4").
 * Emits the sweep as CSV and/or JSON. */
DRACO_API draco_status draco_sweep(const char* arrays, const char* g_values,
                                   const char* alphas, const char* rhos,
                                   char** out_csv, char** out_json);

/* Takeaway + alternative-comparison report from a sweep JSON document. */
DRACO_API draco_status draco_report(const char* sweep_json, char** out_report_json);

/* All resolved model defaults as JSON. */
DRACO_API draco_status draco_defaults_json(char** out_json);

DRACO_API void draco_network_free(draco_network* net);
DRACO_API void draco_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* DRACO_H */
