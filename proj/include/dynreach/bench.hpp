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

#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dynreach/replay.hpp"

namespace dynreach {

struct RunConfig {
  std::string instance;   // id written to the CSV
  std::string algorithm;  // registry spec
  unsigned runs = 3;
  std::optional<std::chrono::nanoseconds> timeout;
  std::optional<bool> lenient;  // default: the sequence's own flag
};

/// Totals of one replay.
struct RunTotals {
  std::chrono::nanoseconds init_time{0};
  std::chrono::nanoseconds insert_time{0};
  std::chrono::nanoseconds delete_time{0};
  std::chrono::nanoseconds query_time{0};
  Counters work;  // initialization plus every operation
  bool timed_out = false;
};

RunTotals totals_of(const ReplayResult& result);

struct AggregateRow {
  std::string instance;
  std::string algorithm;
  std::uint32_t n = 0;
  double d_avg = 0.0;  // mean live edges per vertex over the replay
  std::size_t sigma = 0;
  std::chrono::nanoseconds init_time{0};
  std::chrono::nanoseconds insert_time{0};
  std::chrono::nanoseconds delete_time{0};
  std::chrono::nanoseconds update_time{0};  // insert_time + delete_time
  std::chrono::nanoseconds query_time{0};
  Counters work;
  bool timed_out = false;
};

/// Lower median of each aggregate taken on its own.
AggregateRow aggregate_runs(const std::vector<RunTotals>& runs);

/// Replays seq `runs` times with fresh algorithm instances. A run that times
/// out ends the repetitions; the row then carries that run's partial totals.
/// Throws UsageError for a bad spec and ReplayError for a strict miss.
AggregateRow run_benchmark(const OperationSequence& seq, const RunConfig& cfg);

struct BenchJob {
  const OperationSequence* sequence = nullptr;
  RunConfig config;
};

/// Runs the jobs on up to `threads` workers. Rows come back in job order.
std::vector<AggregateRow> run_jobs(const std::vector<BenchJob>& jobs,
                                   unsigned threads);

std::string csv_header();
std::string format_csv(const std::vector<AggregateRow>& rows);
void write_csv(const std::vector<AggregateRow>& rows,
               const std::filesystem::path& path);

}  // namespace dynreach
