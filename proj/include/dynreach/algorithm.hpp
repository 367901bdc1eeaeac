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

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "dynreach/graph.hpp"

namespace dynreach {

/// Work counters shared by all algorithms. Always on.
struct Counters {
  std::uint64_t vertices_visited = 0;
  std::uint64_t edges_scanned = 0;
  std::uint64_t queue_pops = 0;
  std::uint64_t recomputations = 0;

  Counters& operator+=(const Counters& o) {
    vertices_visited += o.vertices_visited;
    edges_scanned += o.edges_scanned;
    queue_pops += o.queue_pops;
    recomputations += o.recomputations;
    return *this;
  }
  friend Counters operator-(Counters a, const Counters& b) {
    a.vertices_visited -= b.vertices_visited;
    a.edges_scanned -= b.edges_scanned;
    a.queue_pops -= b.queue_pops;
    a.recomputations -= b.recomputations;
    return a;
  }
  friend bool operator==(const Counters&, const Counters&) = default;
};

/// The four-routine contract every single-source reachability algorithm
/// implements.
///
/// The algorithm observes a graph it does not own. Whoever drives it mutates
/// the graph first and then notifies: an inserted edge is already present
/// when edge_inserted runs, a deleted edge is already gone when edge_deleted
/// runs. The vertex set must not change after initialize().
class ReachabilityAlgorithm {
 public:
  virtual ~ReachabilityAlgorithm() = default;
  ReachabilityAlgorithm(const ReachabilityAlgorithm&) = delete;
  ReachabilityAlgorithm& operator=(const ReachabilityAlgorithm&) = delete;

  virtual std::string name() const = 0;
  virtual void initialize() = 0;
  virtual void edge_inserted(VertexId u, VertexId v, EdgeId e) = 0;
  virtual void edge_deleted(VertexId u, VertexId v, EdgeId e) = 0;
  // Not const: lazy variants advance their traversal while answering.
  virtual bool query(VertexId t) = 0;

  const Counters& counters() const { return counters_; }
  VertexId source() const { return source_; }
  const DiGraph& graph() const { return graph_; }

 protected:
  ReachabilityAlgorithm(const DiGraph& graph, VertexId source)
      : graph_(graph), source_(source) {}

  const DiGraph& graph_;
  VertexId source_;
  Counters counters_;
};

inline constexpr std::uint32_t kUnreachableDistance =
    std::numeric_limits<std::uint32_t>::max();

/// Plain BFS from s; independent of every algorithm implementation.
std::vector<bool> oracle_reachable_set(const DiGraph& g, VertexId s);
bool oracle_reachable(const DiGraph& g, VertexId s, VertexId t);
/// BFS distances from s, kUnreachableDistance where unreachable.
std::vector<std::uint32_t> oracle_distances(const DiGraph& g, VertexId s);

}  // namespace dynreach
