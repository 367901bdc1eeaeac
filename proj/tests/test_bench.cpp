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

#include <sstream>

#include "doctest.h"
#include "dynreach/bench.hpp"
#include "dynreach/instance_gen.hpp"
#include "dynreach/registry.hpp"

using namespace dynreach;
using std::chrono::nanoseconds;

namespace {

RunTotals totals(std::int64_t ins_ns, std::uint64_t work) {
  RunTotals t;
  t.insert_time = nanoseconds(ins_ns);
  t.work.edges_scanned = work;
  return t;
}

OperationSequence small_instance() {
  ErSpec s;
  s.n = 50;
  s.density = 2;
  s.sigma = 60;
  s.seed = 3;
  return gen_er_instance(s);
}

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("lower median per aggregate") {
  const auto row = aggregate_runs({totals(5, 30), totals(1, 10), totals(9, 20)});
  CHECK(row.insert_time == nanoseconds(5));
  CHECK(row.work.edges_scanned == 20);
  CHECK(row.update_time == nanoseconds(5));
  const auto even = aggregate_runs({totals(4, 1), totals(2, 3)});
  CHECK(even.insert_time == nanoseconds(2));
  CHECK(even.work.edges_scanned == 1);
  const auto single = aggregate_runs({totals(7, 7)});
  CHECK(single.insert_time == nanoseconds(7));
}

TEST_CASE("benchmark rows") {
  const auto seq = small_instance();
  RunConfig cfg;
  cfg.instance = "er50";
  cfg.algorithm = "ses:5:.5";
  cfg.runs = 1;
  const auto row = run_benchmark(seq, cfg);
  CHECK(row.algorithm == "ses:5:0.5");
  CHECK(row.n == 50);
  CHECK(row.sigma == 60);
  CHECK(row.d_avg > 1.0);
  CHECK(row.d_avg < 3.0);
  CHECK_FALSE(row.timed_out);
  CHECK(row.update_time == row.insert_time + row.delete_time);

  // Counters do not depend on the run count or on timing.
  cfg.runs = 3;
  const auto again = run_benchmark(seq, cfg);
  CHECK(again.work == row.work);

  cfg.algorithm = "nonsense";
  CHECK_THROWS_AS(run_benchmark(seq, cfg), UsageError);
  cfg.algorithm = "sbfs";
  cfg.runs = 0;
  CHECK_THROWS_AS(run_benchmark(seq, cfg), UsageError);
}

TEST_CASE("a timed-out run is flagged") {
  const auto seq = small_instance();
  RunConfig cfg;
  cfg.algorithm = "sbfs";
  cfg.timeout = nanoseconds(0);
  const auto row = run_benchmark(seq, cfg);
  CHECK(row.timed_out);
  CHECK(format_csv({row}).find(",1\n") != std::string::npos);
}

TEST_CASE("CSV output") {
  CHECK(format_csv({}) == csv_header());
  CHECK(line_count(csv_header()) == 1);

  const auto seq = small_instance();
  std::vector<BenchJob> jobs;
  for (const char* alg : {"sbfs", "es:inf:inf"}) {
    BenchJob j;
    j.sequence = &seq;
    j.config.instance = "toy,1";
    j.config.algorithm = alg;
    j.config.runs = 1;
    jobs.push_back(j);
  }
  const auto rows = run_jobs(jobs, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].algorithm == "sbfs");
  CHECK(rows[1].algorithm == "es:inf:inf");
  const std::string csv = format_csv(rows);
  CHECK(line_count(csv) == 3);
  CHECK(csv.find("\"toy,1\",sbfs,50,") != std::string::npos);
  CHECK(format_csv(rows) == csv);

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(std::count(line.begin(), line.end(), ',') == 14);

  // Same rows whatever the worker count.
  const auto serial = run_jobs(jobs, 1);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(serial[i].work == rows[i].work);

  jobs[1].config.algorithm = "es:0:1";
  CHECK_THROWS_AS(run_jobs(jobs, 2), UsageError);
}

TEST_CASE("registry") {
  CHECK(canonical_configurations().size() == 13);
  CHECK(benchmark_configurations().size() == 19);
  for (const auto& name : benchmark_configurations())
    CHECK(canonical_algorithm_name(name) == name);
  CHECK(canonical_algorithm_name("si:R:nSF:.25") == "si:R:nSF:0.25");
  for (const char* bad : {"", "bfs", "si:R:SF", "si:R:SF:2", "si:X:SF:0.5", "es:0:1",
                          "es:5", "ses:5:-1", "mes:five:1", "sbfs:1"})
    CHECK_THROWS_AS(make_algorithm_factory(bad), UsageError);
}
