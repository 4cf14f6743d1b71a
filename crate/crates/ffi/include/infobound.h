#ifndef INFOBOUND_H
#define INFOBOUND_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IbFormat {
  IB_FORMAT_TABLE = 0,
  IB_FORMAT_JSON = 1,
} IbFormat;

typedef enum IbStatus {
  IB_STATUS_OK = 0,
  IB_STATUS_NULL_POINTER = 1,
  IB_STATUS_INVALID_UTF8 = 2,
  IB_STATUS_PARSE = 3,
  IB_STATUS_DIMENSION = 4,
  IB_STATUS_INVALID_ARGUMENT = 5,
  IB_STATUS_ARITHMETIC = 6,
  IB_STATUS_SCENARIO = 7,
  IB_STATUS_IO = 8,
  IB_STATUS_OUT_OF_RANGE = 9,
  IB_STATUS_PANIC = 10,
} IbStatus;

/**
 * Evaluated reports, in scenario order.
 */
typedef struct IbReportList IbReportList;

/**
 * A validated scenario file.
 */
typedef struct IbScenarioSet IbScenarioSet;

/**
 * A dimensioned value: SI magnitude and exponents of kg, m, s, K.
 */
typedef struct IbQuantity {
  double magnitude;
  int32_t mass;
  int32_t length;
  int32_t time;
  int32_t temperature;
} IbQuantity;

typedef struct IbBlackHole {
  double mass_kg;
  double radius_m;
  double horizon_area_m2;
  double entropy_j_per_k;
  double capture_cross_section_m2;
  double min_capture_momentum_kg_m_per_s;
  double min_bit_energy_j;
} IbBlackHole;

typedef struct IbStorageBound {
  double term_quadratic;
  double term_entropy;
  double term_linear;
  double rhs;
  double min_mass_kg;
  double n_max_bits;
  bool infeasible;
} IbStorageBound;

typedef struct IbReportSummary {
  double length_m;
  double energy_j;
  double entropy_j_per_k;
  double mu;
  double bh_limit_bits;
  struct IbStorageBound storage;
  double landauer_floor_j_per_k;
  /**
   * Only meaningful when `has_gap` is true.
   */
  double log10_gap;
  bool has_gap;
} IbReportSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or an empty string.
 * The pointer stays valid until the next `ib_` call on the same thread.
 */
const char *ib_last_error_message(void);

/**
 * Static, NUL-terminated name of a status code.
 */
const char *ib_status_name(enum IbStatus status);

/**
 * The relativistic capture factor sqrt(27/4).
 */
double ib_default_mu(void);

/**
 * Parses and evaluates a quantity expression such as `"1 GW * 10 fs"`.
 *
 * # Safety
 * `expr` must be a NUL-terminated string; `out` must be writable.
 */
enum IbStatus ib_eval(const char *expr, struct IbQuantity *out_q);

/**
 * Expresses `q` as a multiple of the unit expression `unit`.
 *
 * # Safety
 * `q` must point to a valid `IbQuantity`, `unit` must be a NUL-terminated
 * string and `out_value` must be writable.
 */
enum IbStatus ib_value_in(const struct IbQuantity *q, const char *unit, double *out_value);

/**
 * Properties of a Schwarzschild hole of `mass_kg` with capture factor `mu`.
 *
 * # Safety
 * `out_props` must be writable.
 */
enum IbStatus ib_blackhole(double mass_kg, double mu, struct IbBlackHole *out_props);

/**
 * Areal limit in bits for a region of extent `length_m`.
 *
 * # Safety
 * `out_bits` must be writable.
 */
enum IbStatus ib_bekenstein_hawking_limit(double length_m, double *out_bits);

/**
 * Per-bit entropy floor (2π/μ) k_B, in J/K.
 *
 * # Safety
 * `out_entropy` must be writable.
 */
enum IbStatus ib_landauer_floor(double mu, double *out_entropy);

/**
 * Entropy n k_B ln 2, in J/K, for erasing `bits` bits.
 *
 * # Safety
 * `out_entropy` must be writable.
 */
enum IbStatus ib_landauer_erasure_entropy(double bits, double *out_entropy);

/**
 * Storage bound for a system of extent `length_m`, total energy
 * `energy_j` and intrinsic entropy `entropy_j_per_k`.
 *
 * # Safety
 * `out_bound` must be writable.
 */
enum IbStatus ib_storage_bound(double length_m,
                               double energy_j,
                               double entropy_j_per_k,
                               double mu,
                               struct IbStorageBound *out_bound);

/**
 * Second-law slack, in units of k_B, for dropping the system carrying
 * `bits` bits into a hole of `hole_mass_kg`.
 *
 * # Safety
 * `out_slack` must be writable.
 */
enum IbStatus ib_absorption_slack(double length_m,
                                  double energy_j,
                                  double entropy_j_per_k,
                                  double mu,
                                  double bits,
                                  double hole_mass_kg,
                                  double *out_slack);

/**
 * Parses and validates a scenario document held in memory.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out_set` must be writable. The
 * returned handle is released with `ib_scenarios_free`.
 */
enum IbStatus ib_scenarios_load_str(const char *json, struct IbScenarioSet **out_set);

/**
 * Loads and validates a scenario file.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out_set` must be writable.
 */
enum IbStatus ib_scenarios_load_file(const char *path, struct IbScenarioSet **out_set);

/**
 * Number of scenarios in the set; 0 for a null handle.
 *
 * # Safety
 * `set` must be null or a live handle from `ib_scenarios_load_*`.
 */
size_t ib_scenarios_len(const struct IbScenarioSet *set);

/**
 * # Safety
 * `set` must be null or a live handle; it must not be used afterwards.
 */
void ib_scenarios_free(struct IbScenarioSet *set);

/**
 * Evaluates every scenario.
 *
 * # Safety
 * `set` must be a live handle; `out_list` must be writable. The list is
 * released with `ib_reports_free`.
 */
enum IbStatus ib_scenarios_evaluate(const struct IbScenarioSet *set,
                                    struct IbReportList **out_list);

/**
 * # Safety
 * `list` must be null or a live handle.
 */
size_t ib_reports_len(const struct IbReportList *list);

/**
 * Scenario name of report `index`, or null when out of range. Owned by
 * the list.
 *
 * # Safety
 * `list` must be null or a live handle.
 */
const char *ib_reports_name(const struct IbReportList *list, size_t index);

/**
 * Numeric summary of report `index`.
 *
 * # Safety
 * `list` must be a live handle; `out_summary` must be writable.
 */
enum IbStatus ib_reports_get(const struct IbReportList *list,
                             size_t index,
                             struct IbReportSummary *out_summary);

/**
 * Renders the list as a table or JSON. The string is released with
 * `ib_string_free`.
 *
 * # Safety
 * `list` must be a live handle; `out_text` must be writable.
 */
enum IbStatus ib_reports_render(const struct IbReportList *list,
                                enum IbFormat format,
                                char **out_text);

/**
 * # Safety
 * `list` must be null or a live handle; it must not be used afterwards.
 */
void ib_reports_free(struct IbReportList *list);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void ib_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INFOBOUND_H */
