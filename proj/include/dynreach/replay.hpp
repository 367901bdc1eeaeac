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
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dynreach/algorithm.hpp"
#include "dynreach/sequence.hpp"

namespace dynreach {

using AlgorithmFactory = std::function<std::unique_ptr<ReachabilityAlgorithm>(
    const DiGraph&, VertexId source)>;

/// Timing and work for one routine call.
struct MeasurementRecord {
  std::size_t op_index = 0;
  OpKind kind = OpKind::kQuery;
  std::chrono::nanoseconds wall_time{0};
  Counters work;
  std::size_t live_edges = 0;  // after the operation
  bool skipped = false;        // lenient removal without a live match
};

struct ReplayOptions {
  // Overrides the sequence's own lenient flag when set.
  std::optional<bool> lenient;
  std::optional<std::chrono::nanoseconds> timeout;
};

struct ReplayResult {
  std::chrono::nanoseconds init_time{0};
  Counters init_work;
  std::vector<MeasurementRecord> records;
  std::vector<bool> answers;  // one per query, in order
  bool timed_out = false;
};

class ReplayError : public std::runtime_error {
 public:
  ReplayError(std::size_t op_index, const std::string& what)
      : std::runtime_error("operation " + std::to_string(op_index) + ": " +
                           what),
        op_index_(op_index) {}
  std::size_t op_index() const { return op_index_; }

 private:
  std::size_t op_index_;
};

/// A graph with an attached algorithm. Owns all graph mutation: the edge is
/// added before edge_inserted and removed before edge_deleted.
class DynamicInstance {
 public:
  DynamicInstance(std::uint32_t n, VertexId source,
                  const AlgorithmFactory& factory);
  // The algorithm keeps a reference to graph_.
  DynamicInstance(const DynamicInstance&) = delete;
  DynamicInstance& operator=(const DynamicInstance&) = delete;

  /// Loads edges without notifying the algorithm; call before initialize().
  void load(const std::vector<EdgePair>& edges);
  void initialize() { algorithm_->initialize(); }

  EdgeId insert(VertexId u, VertexId v);
  /// Removes the youngest live (u, v); false if there is none.
  bool remove(VertexId u, VertexId v);
  bool query(VertexId t);

  const DiGraph& graph() const { return graph_; }
  ReachabilityAlgorithm& algorithm() { return *algorithm_; }
  const ReachabilityAlgorithm& algorithm() const { return *algorithm_; }

 private:
  DiGraph graph_;
  std::unique_ptr<ReachabilityAlgorithm> algorithm_;
};

ReplayResult replay(const OperationSequence& seq,
                    const AlgorithmFactory& factory,
                    const ReplayOptions& options = {});

struct VerifyReport {
  bool passed = true;
  // Index of the first operation after which a mismatch was seen; -1 means
  // right after initialize().
  std::ptrdiff_t op_index = 0;
  VertexId vertex = 0;
  bool expected = false;
};

/// Replays seq and, after initialization and after every update, queries
/// every vertex and compares against a fresh BFS.
VerifyReport verify_against_oracle(const OperationSequence& seq,
                                   const AlgorithmFactory& factory,
                                   const ReplayOptions& options = {});

}  // namespace dynreach
