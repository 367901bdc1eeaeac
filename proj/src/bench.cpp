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

#include "dynreach/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <exception>
#include <thread>

#include "dynreach/registry.hpp"

namespace dynreach {

using std::chrono::nanoseconds;

RunTotals totals_of(const ReplayResult& result) {
  RunTotals t;
  t.init_time = result.init_time;
  t.work = result.init_work;
  t.timed_out = result.timed_out;
  for (const auto& rec : result.records) {
    t.work += rec.work;
    switch (rec.kind) {
      case OpKind::kAddEdge: t.insert_time += rec.wall_time; break;
      case OpKind::kRemoveEdge: t.delete_time += rec.wall_time; break;
      case OpKind::kQuery: t.query_time += rec.wall_time; break;
    }
  }
  return t;
}

namespace {

template <typename T, typename Get>
T lower_median(const std::vector<RunTotals>& runs, Get get) {
  std::vector<T> values;
  values.reserve(runs.size());
  for (const auto& r : runs) values.push_back(get(r));
  const std::size_t mid = (values.size() - 1) / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  return values[mid];
}

}  // namespace

AggregateRow aggregate_runs(const std::vector<RunTotals>& runs) {
  AggregateRow row;
  if (runs.empty()) return row;
  row.init_time = lower_median<nanoseconds>(runs, [](auto& r) { return r.init_time; });
  row.insert_time =
      lower_median<nanoseconds>(runs, [](auto& r) { return r.insert_time; });
  row.delete_time =
      lower_median<nanoseconds>(runs, [](auto& r) { return r.delete_time; });
  row.query_time =
      lower_median<nanoseconds>(runs, [](auto& r) { return r.query_time; });
  row.update_time = row.insert_time + row.delete_time;
  row.work.vertices_visited = lower_median<std::uint64_t>(
      runs, [](auto& r) { return r.work.vertices_visited; });
  row.work.edges_scanned =
      lower_median<std::uint64_t>(runs, [](auto& r) { return r.work.edges_scanned; });
  row.work.queue_pops =
      lower_median<std::uint64_t>(runs, [](auto& r) { return r.work.queue_pops; });
  row.work.recomputations = lower_median<std::uint64_t>(
      runs, [](auto& r) { return r.work.recomputations; });
  row.timed_out = std::any_of(runs.begin(), runs.end(),
                              [](const RunTotals& r) { return r.timed_out; });
  return row;
}

AggregateRow run_benchmark(const OperationSequence& seq, const RunConfig& cfg) {
  if (cfg.runs == 0) throw UsageError("runs must be at least 1");
  const AlgorithmFactory factory = make_algorithm_factory(cfg.algorithm);
  ReplayOptions options;
  options.lenient = cfg.lenient;
  options.timeout = cfg.timeout;

  std::vector<RunTotals> runs;
  double d_avg = seq.n == 0 ? 0.0
                            : static_cast<double>(seq.initial_edges.size()) / seq.n;
  bool timed_out = false;
  for (unsigned r = 0; r < cfg.runs; ++r) {
    const ReplayResult result = replay(seq, factory, options);
    if (r == 0 && !result.records.empty()) {
      double sum = 0;
      for (const auto& rec : result.records) sum += static_cast<double>(rec.live_edges);
      d_avg = sum / static_cast<double>(result.records.size()) / seq.n;
    }
    if (result.timed_out) {
      runs.assign(1, totals_of(result));
      timed_out = true;
      break;
    }
    runs.push_back(totals_of(result));
  }

  AggregateRow row = aggregate_runs(runs);
  row.timed_out = timed_out;
  row.instance = cfg.instance;
  row.algorithm = canonical_algorithm_name(cfg.algorithm);
  row.n = seq.n;
  row.d_avg = d_avg;
  row.sigma = seq.ops.size();
  return row;
}

std::vector<AggregateRow> run_jobs(const std::vector<BenchJob>& jobs,
                                   unsigned threads) {
  std::vector<AggregateRow> rows(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        rows[i] = run_benchmark(*jobs[i].sequence, jobs[i].config);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string csv_header() {
  return "instance,algorithm,n,d_avg,sigma,init_us,ins_us,del_us,upd_us,qry_us,"
         "vertices_visited,edges_scanned,queue_pops,recomputations,timed_out\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string micros(nanoseconds ns) {
  const auto count = static_cast<std::uint64_t>(std::max<std::int64_t>(0, ns.count()));
  char buf[48];
  std::snprintf(buf, sizeof buf, "%" PRIu64 ".%03" PRIu64, count / 1000, count % 1000);
  return buf;
}

}  // namespace

std::string format_csv(const std::vector<AggregateRow>& rows) {
  std::string out = csv_header();
  char buf[256];
  for (const auto& r : rows) {
    out += csv_field(r.instance);
    out += ',';
    out += csv_field(r.algorithm);
    std::snprintf(buf, sizeof buf, ",%" PRIu32 ",%.4f,%zu,", r.n, r.d_avg, r.sigma);
    out += buf;
    out += micros(r.init_time) + ',' + micros(r.insert_time) + ',' +
           micros(r.delete_time) + ',' + micros(r.update_time) + ',' +
           micros(r.query_time);
    std::snprintf(buf, sizeof buf,
                  ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%d\n",
                  r.work.vertices_visited, r.work.edges_scanned,
                  r.work.queue_pops, r.work.recomputations, r.timed_out ? 1 : 0);
    out += buf;
  }
  return out;
}

void write_csv(const std::vector<AggregateRow>& rows,
               const std::filesystem::path& path) {
  write_text_file(path, format_csv(rows));
}

}  // namespace dynreach
