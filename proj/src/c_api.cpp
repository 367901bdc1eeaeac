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

#include "dynreach/dynreach.h"

#include <cstdio>
#include <cstring>
#include <exception>
#include <filesystem>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "dynreach/bench.hpp"
#include "dynreach/ingest.hpp"
#include "dynreach/instance_gen.hpp"
#include "dynreach/registry.hpp"
#include "dynreach/replay.hpp"
#include "dynreach/sequence.hpp"

struct dr_sequence {
  dynreach::OperationSequence seq;
};

struct dr_engine {
  std::unique_ptr<dynreach::DynamicInstance> instance;
};

struct dr_results {
  std::vector<dynreach::AggregateRow> rows;
};

namespace {

thread_local std::string g_last_error;

dr_status fail(dr_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

/// Runs fn, mapping exceptions to status codes.
template <typename Fn>
dr_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const dynreach::UsageError& e) {
    return fail(DR_ERR_USAGE, e.what());
  } catch (const dynreach::ParseError& e) {
    return fail(DR_ERR_PARSE, e.what());
  } catch (const dynreach::ReplayError& e) {
    return fail(DR_ERR_REPLAY, e.what());
  } catch (const dynreach::IoError& e) {
    return fail(DR_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(DR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DR_ERR_INTERNAL, "unknown error");
  }
}

dr_status null_arg(const char* name) {
  return fail(DR_ERR_INVALID_ARGUMENT, std::string(name) + " is NULL");
}

dr_status emit(dynreach::OperationSequence seq, dr_sequence** out) {
  *out = new dr_sequence{std::move(seq)};
  return DR_OK;
}

double to_us(std::chrono::nanoseconds ns) {
  return static_cast<double>(ns.count()) / 1000.0;
}

dr_counters to_c(const dynreach::Counters& c) {
  return {c.vertices_visited, c.edges_scanned, c.queue_pops, c.recomputations};
}

std::optional<bool> lenient_override(int lenient) {
  if (lenient < 0) return std::nullopt;
  return lenient != 0;
}

const std::vector<std::string>& canonical() {
  static const std::vector<std::string> names = dynreach::canonical_configurations();
  return names;
}

}  // namespace

extern "C" {

const char* dr_last_error(void) { return g_last_error.c_str(); }

const char* dr_status_name(dr_status status) {
  switch (status) {
    case DR_OK: return "ok";
    case DR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DR_ERR_USAGE: return "usage error";
    case DR_ERR_PARSE: return "parse error";
    case DR_ERR_IO: return "i/o error";
    case DR_ERR_REPLAY: return "replay error";
    case DR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

dr_status dr_sequence_load(const char* path, dr_sequence** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(dynreach::load_sequence(path), out); });
}

dr_status dr_sequence_parse(const char* text, size_t length, dr_sequence** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return guarded([&] {
    return emit(dynreach::parse_sequence(std::string_view(text, length)), out);
  });
}

dr_status dr_sequence_save(const dr_sequence* seq, const char* path) {
  if (!seq) return null_arg("seq");
  if (!path) return null_arg("path");
  return guarded([&] {
    dynreach::save_sequence(seq->seq, path);
    return DR_OK;
  });
}

dr_status dr_sequence_info_get(const dr_sequence* seq, dr_sequence_info* out) {
  if (!seq) return null_arg("seq");
  if (!out) return null_arg("out");
  const auto s = dynreach::summarize(seq->seq);
  *out = {seq->seq.n, seq->seq.source, s.initial_edges, s.insertions,
          s.deletions, s.queries, seq->seq.lenient ? 1 : 0};
  return DR_OK;
}

void dr_sequence_free(dr_sequence* seq) { delete seq; }

dr_status dr_generate(const char* spec, dr_sequence** out) {
  if (!spec) return null_arg("spec");
  if (!out) return null_arg("out");
  return guarded([&] {
    return emit(dynreach::generate(dynreach::parse_generator_spec(spec)), out);
  });
}

dr_status dr_sequence_shuffle(const dr_sequence* seq, uint64_t seed,
                              dr_sequence** out) {
  if (!seq) return null_arg("seq");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(dynreach::shuffle_sequence(seq->seq, seed), out); });
}

dr_status dr_ingest_temporal(const char* path, dr_sequence** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  return guarded([&] {
    const auto events = dynreach::parse_temporal_stream(dynreach::read_text_file(path));
    return emit(dynreach::events_to_sequence(events).sequence, out);
  });
}

dr_status dr_ingest_snapshots(const char* const* paths, size_t count,
                              uint64_t seed, uint32_t source_rank,
                              dr_sequence** out) {
  if (!paths) return null_arg("paths");
  if (!out) return null_arg("out");
  return guarded([&] {
    std::vector<std::filesystem::path> files;
    for (size_t i = 0; i < count; ++i) {
      if (!paths[i]) return null_arg("paths[i]");
      files.emplace_back(paths[i]);
    }
    return emit(dynreach::snapshots_from_files(files, seed, source_rank).sequence, out);
  });
}

size_t dr_canonical_algorithm_count(void) { return canonical().size(); }

const char* dr_canonical_algorithm(size_t index) {
  return index < canonical().size() ? canonical()[index].c_str() : nullptr;
}

dr_status dr_algorithm_validate(const char* spec, char* buffer, size_t capacity) {
  if (!spec) return null_arg("spec");
  return guarded([&] {
    const std::string name = dynreach::canonical_algorithm_name(spec);
    if (buffer && capacity > 0) {
      const size_t len = std::min(name.size(), capacity - 1);
      std::memcpy(buffer, name.data(), len);
      buffer[len] = '\0';
    }
    return DR_OK;
  });
}

dr_status dr_engine_create(uint32_t n, uint32_t source, const char* algorithm,
                           dr_engine** out) {
  if (!algorithm) return null_arg("algorithm");
  if (!out) return null_arg("out");
  return guarded([&] {
    auto factory = dynreach::make_algorithm_factory(algorithm);
    auto engine = std::make_unique<dr_engine>();
    engine->instance = std::make_unique<dynreach::DynamicInstance>(n, source, factory);
    engine->instance->initialize();
    *out = engine.release();
    return DR_OK;
  });
}

dr_status dr_engine_add_edge(dr_engine* engine, uint32_t u, uint32_t v) {
  if (!engine) return null_arg("engine");
  return guarded([&] {
    engine->instance->insert(u, v);
    return DR_OK;
  });
}

dr_status dr_engine_remove_edge(dr_engine* engine, uint32_t u, uint32_t v,
                                int* removed) {
  if (!engine) return null_arg("engine");
  return guarded([&] {
    const auto n = engine->instance->graph().vertex_count();
    if (u >= n || v >= n) return fail(DR_ERR_INVALID_ARGUMENT, "vertex out of range");
    const bool ok = engine->instance->remove(u, v);
    if (removed) *removed = ok ? 1 : 0;
    return DR_OK;
  });
}

dr_status dr_engine_query(dr_engine* engine, uint32_t t, int* reachable) {
  if (!engine) return null_arg("engine");
  if (!reachable) return null_arg("reachable");
  return guarded([&] {
    *reachable = engine->instance->query(t) ? 1 : 0;
    return DR_OK;
  });
}

dr_status dr_engine_counters(const dr_engine* engine, dr_counters* out) {
  if (!engine) return null_arg("engine");
  if (!out) return null_arg("out");
  *out = to_c(engine->instance->algorithm().counters());
  return DR_OK;
}

void dr_engine_free(dr_engine* engine) { delete engine; }

dr_status dr_verify(const dr_sequence* seq, const char* algorithm, int lenient,
                    dr_verify_report* out) {
  if (!seq) return null_arg("seq");
  if (!algorithm) return null_arg("algorithm");
  if (!out) return null_arg("out");
  return guarded([&] {
    dynreach::ReplayOptions options;
    options.lenient = lenient_override(lenient);
    const auto report = dynreach::verify_against_oracle(
        seq->seq, dynreach::make_algorithm_factory(algorithm), options);
    *out = {report.passed ? 1 : 0, static_cast<int64_t>(report.op_index),
            report.vertex, report.expected ? 1 : 0};
    return DR_OK;
  });
}

dr_status dr_run_jobs(const dr_job* jobs, size_t count, unsigned threads,
                      dr_results** out) {
  if (!jobs && count > 0) return null_arg("jobs");
  if (!out) return null_arg("out");
  return guarded([&] {
    std::vector<dynreach::BenchJob> list;
    list.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      const dr_job& j = jobs[i];
      if (!j.sequence) return null_arg("jobs[i].sequence");
      if (!j.config.algorithm) return null_arg("jobs[i].config.algorithm");
      dynreach::BenchJob job;
      job.sequence = &j.sequence->seq;
      job.config.instance = j.config.instance ? j.config.instance : "";
      job.config.algorithm = j.config.algorithm;
      job.config.runs = j.config.runs == 0 ? 3 : j.config.runs;
      if (j.config.timeout_seconds > 0)
        job.config.timeout = std::chrono::nanoseconds(
            static_cast<std::int64_t>(j.config.timeout_seconds * 1e9));
      job.config.lenient = lenient_override(j.config.lenient);
      // Resolve every spec up front so a typo fails before any work starts.
      dynreach::make_algorithm_factory(job.config.algorithm);
      list.push_back(std::move(job));
    }
    auto results = std::make_unique<dr_results>();
    results->rows = dynreach::run_jobs(list, threads);
    *out = results.release();
    return DR_OK;
  });
}

size_t dr_results_count(const dr_results* results) {
  return results ? results->rows.size() : 0;
}

dr_status dr_results_row(const dr_results* results, size_t index, dr_row* out) {
  if (!results) return null_arg("results");
  if (!out) return null_arg("out");
  if (index >= results->rows.size())
    return fail(DR_ERR_INVALID_ARGUMENT, "row index out of range");
  const auto& r = results->rows[index];
  *out = {to_us(r.init_time),   to_us(r.insert_time), to_us(r.delete_time),
          to_us(r.update_time), to_us(r.query_time),  to_c(r.work),
          r.timed_out ? 1 : 0};
  return DR_OK;
}

dr_status dr_results_write_csv(const dr_results* results, const char* path) {
  if (!results) return null_arg("results");
  return guarded([&] {
    if (path) {
      dynreach::write_csv(results->rows, path);
    } else {
      const std::string text = dynreach::format_csv(results->rows);
      if (std::fwrite(text.data(), 1, text.size(), stdout) != text.size() ||
          std::fflush(stdout) != 0)
        return fail(DR_ERR_IO, "writing to stdout failed");
    }
    return DR_OK;
  });
}

void dr_results_free(dr_results* results) { delete results; }

}  // extern "C"
