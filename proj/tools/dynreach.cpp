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

// Command-line front end: generate, ingest, run, verify.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "dynreach/dynreach.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitTimeout = 3;

struct SequenceHandle {
  dr_sequence* ptr = nullptr;
  SequenceHandle() = default;
  SequenceHandle(const SequenceHandle&) = delete;
  SequenceHandle& operator=(const SequenceHandle&) = delete;
  SequenceHandle(SequenceHandle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
  SequenceHandle& operator=(SequenceHandle&& o) noexcept {
    std::swap(ptr, o.ptr);
    return *this;
  }
  ~SequenceHandle() { dr_sequence_free(ptr); }
};

int report(dr_status status, const std::string& context) {
  std::fprintf(stderr, "dynreach: %s: %s\n", context.c_str(), dr_last_error());
  return status == DR_OK ? kExitOk : kExitUsage;
}

std::string stem_of(const std::string& path) {
  const auto slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name.resize(dot);
  return name;
}

/// Applies an optional shuffle, then saves.
int finish_sequence(SequenceHandle seq, const std::string& output,
                    bool shuffle, std::uint64_t shuffle_seed) {
  if (shuffle) {
    SequenceHandle shuffled;
    if (auto st = dr_sequence_shuffle(seq.ptr, shuffle_seed, &shuffled.ptr); st != DR_OK)
      return report(st, "shuffle");
    seq = std::move(shuffled);
  }
  if (auto st = dr_sequence_save(seq.ptr, output.c_str()); st != DR_OK)
    return report(st, output);
  dr_sequence_info info{};
  dr_sequence_info_get(seq.ptr, &info);
  std::fprintf(stderr,
               "wrote %s: n=%u source=%u initial_edges=%llu insertions=%llu "
               "deletions=%llu queries=%llu%s\n",
               output.c_str(), info.n, info.source,
               static_cast<unsigned long long>(info.initial_edges),
               static_cast<unsigned long long>(info.insertions),
               static_cast<unsigned long long>(info.deletions),
               static_cast<unsigned long long>(info.queries),
               info.lenient ? " lenient" : "");
  return kExitOk;
}

int load_instances(const std::vector<std::string>& paths,
                   std::vector<SequenceHandle>& out) {
  for (const auto& p : paths) {
    SequenceHandle h;
    if (auto st = dr_sequence_load(p.c_str(), &h.ptr); st != DR_OK) return report(st, p);
    out.push_back(std::move(h));
  }
  return kExitOk;
}

std::vector<std::string> resolve_algorithms(const std::vector<std::string>& given,
                                            bool all) {
  std::vector<std::string> algs = given;
  if (all || algs.empty()) {
    algs.clear();
    for (size_t i = 0; i < dr_canonical_algorithm_count(); ++i)
      algs.emplace_back(dr_canonical_algorithm(i));
  }
  return algs;
}

int validate_algorithms(const std::vector<std::string>& algs) {
  for (const auto& a : algs) {
    if (auto st = dr_algorithm_validate(a.c_str(), nullptr, 0); st != DR_OK)
      return report(st, "--algorithm");
  }
  return kExitOk;
}

/// Verifies every (instance, algorithm) pair; prints one line per failure.
int verify_all(const std::vector<std::string>& paths,
               const std::vector<SequenceHandle>& seqs,
               const std::vector<std::string>& algs, int lenient) {
  bool all_passed = true;
  for (size_t i = 0; i < seqs.size(); ++i) {
    for (const auto& a : algs) {
      dr_verify_report rep{};
      if (auto st = dr_verify(seqs[i].ptr, a.c_str(), lenient, &rep); st != DR_OK)
        return report(st, paths[i] + " with " + a);
      if (rep.passed) {
        std::fprintf(stderr, "verify %s %s: ok\n", paths[i].c_str(), a.c_str());
        continue;
      }
      all_passed = false;
      std::fprintf(stderr,
                   "verify %s %s: FAILED after op %lld at vertex %u "
                   "(expected %s)\n",
                   paths[i].c_str(), a.c_str(), static_cast<long long>(rep.op_index),
                   rep.vertex, rep.expected ? "reachable" : "unreachable");
    }
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully dynamic single-source reachability benchmarks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dynreach 1.0.0");

  // generate
  auto* gen = app.add_subcommand("generate", "Generate an instance from a key=value spec");
  std::string gen_spec, gen_spec_file, gen_output;
  std::uint64_t gen_shuffle_seed = 0;
  auto* spec_opt = gen->add_option("--spec", gen_spec,
                                   "Spec, e.g. 'kind=er n=1000 d=2.5 sigma=1000 seed=1'");
  auto* spec_file_opt =
      gen->add_option("--spec-file", gen_spec_file, "File holding the spec")
          ->check(CLI::ExistingFile);
  spec_opt->excludes(spec_file_opt);
  gen->add_option("--output", gen_output, "Sequence file to write")->required();
  auto* gen_shuffle = gen->add_option("--shuffle-seed", gen_shuffle_seed,
                                      "Shuffle the updates with this seed");

  // ingest
  auto* ing = app.add_subcommand("ingest", "Convert temporal or snapshot data");
  std::string ing_temporal, ing_output;
  std::vector<std::string> ing_snapshots;
  std::uint64_t ing_seed = 0, ing_shuffle_seed = 0;
  std::uint32_t ing_source_rank = 0;
  auto* temporal_opt =
      ing->add_option("--temporal", ing_temporal,
                      "Edge stream of '<tail> <head> <sign> <timestamp>' lines")
          ->check(CLI::ExistingFile);
  auto* snapshots_opt =
      ing->add_option("--snapshots", ing_snapshots, "Relationship snapshot files, oldest first")
          ->check(CLI::ExistingFile);
  temporal_opt->excludes(snapshots_opt);
  ing->add_option("--seed", ing_seed, "Seed for ordering each snapshot difference");
  ing->add_option("--source-rank", ing_source_rank,
                  "Source = vertex of this out-degree rank in the first snapshot");
  ing->add_option("--output", ing_output, "Sequence file to write")->required();
  auto* ing_shuffle = ing->add_option("--shuffle-seed", ing_shuffle_seed,
                                      "Shuffle the updates with this seed");

  // run
  auto* run = app.add_subcommand("run", "Benchmark algorithms on instances");
  std::vector<std::string> run_instances, run_algorithms;
  bool run_all = false, run_verify = false, fail_on_timeout = false;
  unsigned run_runs = 3;
  double run_timeout = 0;
  unsigned run_threads = 1;
  std::string run_output;
  run->add_option("--instance", run_instances, "Sequence file (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--algorithm", run_algorithms,
                  "Algorithm spec (repeatable); default: all canonical ones");
  run->add_flag("--all-algorithms", run_all, "Run every canonical configuration");
  run->add_option("--runs", run_runs, "Repetitions per pair; medians are reported")
      ->check(CLI::PositiveNumber);
  run->add_option("--timeout", run_timeout, "Per-replay limit in seconds (0: none)")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--threads", run_threads, "Worker threads")->check(CLI::PositiveNumber);
  run->add_option("--output", run_output, "CSV file (default: stdout)");
  auto* run_lenient = run->add_flag("--lenient", "Skip removals of missing edges");
  auto* run_strict = run->add_flag("--strict", "Reject removals of missing edges");
  run_lenient->excludes(run_strict);
  run->add_flag("--verify", run_verify, "Check every algorithm against the oracle first");
  run->add_flag("--fail-on-timeout", fail_on_timeout, "Exit with 3 if any replay timed out");

  // verify
  auto* ver = app.add_subcommand("verify", "Check algorithms against a BFS oracle");
  std::vector<std::string> ver_instances, ver_algorithms;
  bool ver_all = false;
  ver->add_option("--instance", ver_instances, "Sequence file (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  ver->add_option("--algorithm", ver_algorithms,
                  "Algorithm spec (repeatable); default: all canonical ones");
  ver->add_flag("--all-algorithms", ver_all, "Check every canonical configuration");
  auto* ver_lenient = ver->add_flag("--lenient", "Skip removals of missing edges");
  auto* ver_strict = ver->add_flag("--strict", "Reject removals of missing edges");
  ver_lenient->excludes(ver_strict);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (gen->parsed()) {
    std::string spec = gen_spec;
    if (!gen_spec_file.empty()) {
      std::ifstream in(gen_spec_file);
      std::stringstream ss;
      ss << in.rdbuf();
      spec = ss.str();
    }
    if (spec.empty()) {
      std::fprintf(stderr, "dynreach generate: give --spec or --spec-file\n");
      return kExitUsage;
    }
    SequenceHandle seq;
    if (auto st = dr_generate(spec.c_str(), &seq.ptr); st != DR_OK)
      return report(st, "generate");
    return finish_sequence(std::move(seq), gen_output, gen_shuffle->count() > 0,
                           gen_shuffle_seed);
  }

  if (ing->parsed()) {
    SequenceHandle seq;
    if (!ing_temporal.empty()) {
      if (auto st = dr_ingest_temporal(ing_temporal.c_str(), &seq.ptr); st != DR_OK)
        return report(st, ing_temporal);
    } else if (!ing_snapshots.empty()) {
      std::vector<const char*> paths;
      for (const auto& p : ing_snapshots) paths.push_back(p.c_str());
      if (auto st = dr_ingest_snapshots(paths.data(), paths.size(), ing_seed,
                                        ing_source_rank, &seq.ptr);
          st != DR_OK)
        return report(st, "snapshots");
    } else {
      std::fprintf(stderr, "dynreach ingest: give --temporal or --snapshots\n");
      return kExitUsage;
    }
    return finish_sequence(std::move(seq), ing_output, ing_shuffle->count() > 0,
                           ing_shuffle_seed);
  }

  if (ver->parsed()) {
    const auto algs = resolve_algorithms(ver_algorithms, ver_all);
    if (int rc = validate_algorithms(algs); rc != kExitOk) return rc;
    std::vector<SequenceHandle> seqs;
    if (int rc = load_instances(ver_instances, seqs); rc != kExitOk) return rc;
    const int lenient = ver_lenient->count() ? 1 : ver_strict->count() ? 0 : -1;
    return verify_all(ver_instances, seqs, algs, lenient);
  }

  // run
  const auto algs = resolve_algorithms(run_algorithms, run_all);
  if (int rc = validate_algorithms(algs); rc != kExitOk) return rc;
  std::vector<SequenceHandle> seqs;
  if (int rc = load_instances(run_instances, seqs); rc != kExitOk) return rc;
  const int lenient = run_lenient->count() ? 1 : run_strict->count() ? 0 : -1;
  if (run_verify) {
    if (int rc = verify_all(run_instances, seqs, algs, lenient); rc != kExitOk) return rc;
  }

  std::vector<std::string> ids;
  for (const auto& p : run_instances) ids.push_back(stem_of(p));
  std::vector<dr_job> jobs;
  for (size_t i = 0; i < seqs.size(); ++i) {
    for (const auto& a : algs) {
      dr_job job{};
      job.sequence = seqs[i].ptr;
      job.config.instance = ids[i].c_str();
      job.config.algorithm = a.c_str();
      job.config.runs = run_runs;
      job.config.timeout_seconds = run_timeout;
      job.config.lenient = lenient;
      jobs.push_back(job);
    }
  }
  dr_results* results = nullptr;
  if (auto st = dr_run_jobs(jobs.data(), jobs.size(), run_threads, &results); st != DR_OK)
    return report(st, "run");
  bool any_timeout = false;
  for (size_t i = 0; i < dr_results_count(results); ++i) {
    dr_row row{};
    dr_results_row(results, i, &row);
    any_timeout = any_timeout || row.timed_out;
  }
  const dr_status st =
      dr_results_write_csv(results, run_output.empty() ? nullptr : run_output.c_str());
  dr_results_free(results);
  if (st != DR_OK) return report(st, run_output.empty() ? "stdout" : run_output);
  if (any_timeout) std::fprintf(stderr, "dynreach run: some replays timed out\n");
  return any_timeout && fail_on_timeout ? kExitTimeout : kExitOk;
}
