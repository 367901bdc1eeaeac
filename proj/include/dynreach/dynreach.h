// Copyright 2026 The dynreach Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DYNREACH_DYNREACH_H_
#define DYNREACH_DYNREACH_H_

/* C interface to the dynamic single-source reachability library.
 *
 * Every function returns a dr_status. On failure a message is available from
 * dr_last_error() until the next call on the same thread. Handles are opaque;
 * release them with the matching *_free function (NULL is accepted). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DYNREACH_BUILDING)
#define DR_API __declspec(dllexport)
#else
#define DR_API __declspec(dllimport)
#endif
#else
#define DR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dr_status {
  DR_OK = 0,
  DR_ERR_INVALID_ARGUMENT = 1, /* NULL handle, vertex out of range, bad spec value */
  DR_ERR_USAGE = 2,            /* unknown algorithm spec */
  DR_ERR_PARSE = 3,            /* malformed input text */
  DR_ERR_IO = 4,               /* file could not be read or written */
  DR_ERR_REPLAY = 5,           /* strict replay hit a removal without a live edge */
  DR_ERR_INTERNAL = 6
} dr_status;

DR_API const char* dr_last_error(void);
DR_API const char* dr_status_name(dr_status status);

/* ---- Operation sequences ---- */

typedef struct dr_sequence dr_sequence;

typedef struct dr_sequence_info {
  uint32_t n;
  uint32_t source;
  uint64_t initial_edges;
  uint64_t insertions;
  uint64_t deletions;
  uint64_t queries;
  int lenient;
} dr_sequence_info;

DR_API dr_status dr_sequence_load(const char* path, dr_sequence** out);
DR_API dr_status dr_sequence_parse(const char* text, size_t length,
                                   dr_sequence** out);
DR_API dr_status dr_sequence_save(const dr_sequence* seq, const char* path);
DR_API dr_status dr_sequence_info_get(const dr_sequence* seq,
                                      dr_sequence_info* out);
DR_API void dr_sequence_free(dr_sequence* seq);

/* Instance generation from a key=value spec (see the README). */
DR_API dr_status dr_generate(const char* spec, dr_sequence** out);
/* Permutes the updates; queries stay in place. */
DR_API dr_status dr_sequence_shuffle(const dr_sequence* seq, uint64_t seed,
                                     dr_sequence** out);

/* Timestamped edge stream: `<tail> <head> <sign> <timestamp>` lines. */
DR_API dr_status dr_ingest_temporal(const char* path, dr_sequence** out);
/* Relationship snapshots, oldest first. */
DR_API dr_status dr_ingest_snapshots(const char* const* paths, size_t count,
                                     uint64_t seed, uint32_t source_rank,
                                     dr_sequence** out);

/* ---- Algorithms ---- */

DR_API size_t dr_canonical_algorithm_count(void);
/* NULL when index is out of range. */
DR_API const char* dr_canonical_algorithm(size_t index);
/* Checks a spec; writes its normalized name (NUL-terminated, truncated to
 * capacity) when buffer is not NULL. */
DR_API dr_status dr_algorithm_validate(const char* spec, char* buffer,
                                       size_t capacity);

typedef struct dr_counters {
  uint64_t vertices_visited;
  uint64_t edges_scanned;
  uint64_t queue_pops;
  uint64_t recomputations;
} dr_counters;

/* A graph with one attached algorithm, driven edge by edge. */
typedef struct dr_engine dr_engine;

DR_API dr_status dr_engine_create(uint32_t n, uint32_t source,
                                  const char* algorithm, dr_engine** out);
DR_API dr_status dr_engine_add_edge(dr_engine* engine, uint32_t u, uint32_t v);
/* *removed is 0 when no live (u, v) edge exists. */
DR_API dr_status dr_engine_remove_edge(dr_engine* engine, uint32_t u,
                                       uint32_t v, int* removed);
DR_API dr_status dr_engine_query(dr_engine* engine, uint32_t t,
                                 int* reachable);
DR_API dr_status dr_engine_counters(const dr_engine* engine, dr_counters* out);
DR_API void dr_engine_free(dr_engine* engine);

/* ---- Verification ---- */

typedef struct dr_verify_report {
  int passed;
  int64_t op_index; /* -1: right after initialization */
  uint32_t vertex;
  int expected;
} dr_verify_report;

/* lenient: 1 or 0 to override, -1 to use the sequence's flag. */
DR_API dr_status dr_verify(const dr_sequence* seq, const char* algorithm,
                           int lenient, dr_verify_report* out);

/* ---- Benchmarks ---- */

typedef struct dr_run_config {
  const char* instance;  /* id for the CSV */
  const char* algorithm;
  uint32_t runs;         /* 0 means 3 */
  double timeout_seconds; /* <= 0: none */
  int lenient;           /* -1: the sequence's flag */
} dr_run_config;

typedef struct dr_row {
  double init_us;
  double ins_us;
  double del_us;
  double upd_us;
  double qry_us;
  dr_counters work;
  int timed_out;
} dr_row;

typedef struct dr_results dr_results;

/* Runs every (sequence, config) pair given by jobs on up to `threads`
 * workers. Rows keep job order. */
typedef struct dr_job {
  const dr_sequence* sequence;
  dr_run_config config;
} dr_job;

DR_API dr_status dr_run_jobs(const dr_job* jobs, size_t count,
                             unsigned threads, dr_results** out);
DR_API size_t dr_results_count(const dr_results* results);
DR_API dr_status dr_results_row(const dr_results* results, size_t index,
                                dr_row* out);
/* path NULL writes to stdout. */
DR_API dr_status dr_results_write_csv(const dr_results* results,
                                      const char* path);
DR_API void dr_results_free(dr_results* results);

#ifdef __cplusplus
}
#endif

#endif /* DYNREACH_DYNREACH_H_ */
