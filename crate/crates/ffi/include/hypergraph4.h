#ifndef HYPERGRAPH4_H
#define HYPERGRAPH4_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HgStatus {
  HG_STATUS_OK = 0,
  HG_STATUS_NULL_POINTER = 1,
  HG_STATUS_INVALID_ARGUMENT = 2,
  HG_STATUS_PARSE_ERROR = 3,
  HG_STATUS_SOLVER_ERROR = 4,
  HG_STATUS_CLASSIFY_ERROR = 5,
  HG_STATUS_IO_ERROR = 6,
  HG_STATUS_PANIC = 7,
} HgStatus;

/**
 * Closest-product partition, coarsest first.
 */
typedef enum HgPartition {
  HG_PARTITION_FOUR = 0,
  HG_PARTITION_ONE_THREE = 1,
  HG_PARTITION_TWO_TWO = 2,
  HG_PARTITION_ONE_TWO_ONE = 3,
  HG_PARTITION_DISTINCT = 4,
} HgPartition;

typedef enum HgReportFormat {
  HG_REPORT_FORMAT_JSON = 0,
  HG_REPORT_FORMAT_CSV = 1,
  HG_REPORT_FORMAT_MARKDOWN = 2,
} HgReportFormat;

/**
 * Result of a full classification run.
 */
typedef struct HgClassification HgClassification;

/**
 * Orbit assignment of all `2^15` codes.
 */
typedef struct HgOrbitTable HgOrbitTable;

typedef struct HgSolverPolicy {
  uint32_t restarts;
  double tol;
  uint32_t max_iter;
  uint64_t seed;
} HgSolverPolicy;

/**
 * Cuts 1|234 .. 4|123 and 12|34, 13|24, 14|23, in bits.
 */
typedef struct HgEntropyProfile {
  double be1[4];
  double be2[3];
} HgEntropyProfile;

typedef struct HgGeResult {
  double overlap;
  double eg;
  uint32_t restarts_hit;
  bool converged;
} HgGeResult;

typedef struct HgOrbitRecord {
  uint32_t id;
  uint16_t rep;
  uint32_t size;
  uint32_t rank;
  /**
   * Standard hypergraphs in the orbit; 0 below rank 3.
   */
  uint32_t m;
} HgOrbitRecord;

/**
 * One of the 28 hypergraph classes. Entropies are sorted descending.
 */
typedef struct HgClassRecord {
  uint32_t paper_row;
  uint16_t rep;
  uint16_t display;
  uint32_t rank;
  uint32_t m;
  uint32_t orbit_size;
  double ge;
  double be2[3];
  double be1[4];
  enum HgPartition partition;
  /**
   * True when a real closest product state exists.
   */
  bool real;
} HgClassRecord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread; empty if none. Valid until
 * the next failing call on the same thread.
 */
const char *hg_last_error_message(void);

void hg_string_free(char *s);

/**
 * Defaults: 64 restarts, tolerance 1e-12, 5000 sweeps, seed 0.
 */
struct HgSolverPolicy hg_default_policy(void);

/**
 * Parses comma-separated edges such as `"1234,12,3"`.
 */
enum HgStatus hg_parse_edges(const char *text, uint16_t *out_code);

enum HgStatus hg_format_edges(uint16_t raw, char **out);

enum HgStatus hg_apply_x(uint16_t raw, uint8_t vertex_label, uint16_t *out_code);

enum HgStatus hg_apply_z(uint16_t raw, uint8_t vertex_label, uint16_t *out_code);

/**
 * Loop-free form in the same orbit, also 3-edge-free at rank 4.
 */
enum HgStatus hg_standardize(uint16_t raw, uint16_t *out_code);

enum HgStatus hg_rank(uint16_t raw, uint32_t *out_rank);

/**
 * Writes the 16 amplitudes, index bit `i` being qubit `i + 1`.
 */
enum HgStatus hg_build_state(uint16_t raw, double *out_amps);

enum HgStatus hg_entropy_profile(uint16_t raw, struct HgEntropyProfile *out);

enum HgStatus hg_geometric_entanglement(uint16_t raw,
                                        const struct HgSolverPolicy *policy_in,
                                        struct HgGeResult *out);

enum HgStatus hg_orbit_table_new(struct HgOrbitTable **out);

void hg_orbit_table_free(struct HgOrbitTable *table);

enum HgStatus hg_orbit_table_len(const struct HgOrbitTable *table, uint32_t *out_len);

enum HgStatus hg_orbit_of(const struct HgOrbitTable *table,
                          uint16_t raw,
                          struct HgOrbitRecord *out);

/**
 * Classifies every orbit of `table`. Fails with `ClassifyError` when some
 * class matches no reference row or two classes collide.
 */
enum HgStatus hg_classify(const struct HgOrbitTable *table,
                          const struct HgSolverPolicy *policy_in,
                          struct HgClassification **out);

void hg_classification_free(struct HgClassification *c);

/**
 * Number of hypergraph classes (28 on success).
 */
enum HgStatus hg_classification_len(const struct HgClassification *c, uint32_t *out_len);

/**
 * Class `index` in reference-row order.
 */
enum HgStatus hg_classification_class(const struct HgClassification *c,
                                      uint32_t index,
                                      struct HgClassRecord *out);

enum HgStatus hg_classification_report(const struct HgClassification *c,
                                       enum HgReportFormat format,
                                       char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERGRAPH4_H */
