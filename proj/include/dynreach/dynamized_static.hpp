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

#include <deque>
#include <vector>

#include "dynreach/algorithm.hpp"

namespace dynreach {

enum class SearchOrder { kBfs, kDfs };

/// Graph search from a fixed source that can stop as soon as a target is
/// discovered and later continue where it stopped.
///
/// BFS expands the oldest frame, DFS the youngest; both keep a per-frame
/// cursor into the out-list so a suspended expansion resumes mid-list.
/// Resuming is only sound if, since suspension, no edge with a discovered
/// head was removed; callers enforce that through their critical-deletion
/// flag.
class SuspendableSearch {
 public:
  SuspendableSearch(const DiGraph& graph, SearchOrder order)
      : graph_(graph), order_(order) {}

  void restart(VertexId source, Counters& counters);
  /// Runs until `target` has been discovered or the search is exhausted.
  /// Returns whether target is discovered.
  bool advance_until(VertexId target, Counters& counters);
  void run_to_exhaustion(Counters& counters);

  bool discovered(VertexId v) const { return v < seen_.size() && seen_[v]; }
  bool exhausted() const { return frontier_.empty(); }
  std::size_t frontier_size() const { return frontier_.size(); }
  SearchOrder order() const { return order_; }

 private:
  struct Frame {
    VertexId vertex;
    std::uint32_t next;
  };
  static constexpr VertexId kNoTarget = static_cast<VertexId>(-1);

  const DiGraph& graph_;
  SearchOrder order_;
  std::vector<char> seen_;
  std::deque<Frame> frontier_;
};

/// SBFS / SDFS: no state; every query runs a full search from the source.
class StaticSearch final : public ReachabilityAlgorithm {
 public:
  StaticSearch(const DiGraph& graph, VertexId source, SearchOrder order);

  std::string name() const override;
  void initialize() override {}
  void edge_inserted(VertexId, VertexId, EdgeId) override {}
  void edge_deleted(VertexId, VertexId, EdgeId) override {}
  bool query(VertexId t) override;

 private:
  SuspendableSearch search_;
};

/// Cache plus the two critical-update flags shared by the caching variants.
struct CacheState {
  bool critical_insertion_seen = false;
  bool critical_deletion_seen = false;
};

/// CBFS / CDFS: full reachability cache, rebuilt entirely when a query hits
/// a state that a critical update may have invalidated.
class CachingSearch final : public ReachabilityAlgorithm {
 public:
  CachingSearch(const DiGraph& graph, VertexId source, SearchOrder order);

  std::string name() const override;
  void initialize() override;
  void edge_inserted(VertexId u, VertexId v, EdgeId e) override;
  void edge_deleted(VertexId u, VertexId v, EdgeId e) override;
  bool query(VertexId t) override;

  const CacheState& cache_state() const { return flags_; }
  bool cached(VertexId v) const { return search_.discovered(v); }

 private:
  void recompute();

  SuspendableSearch search_;
  CacheState flags_;
};

/// LBFS / LDFS: the cache only holds vertices the current search has
/// discovered; the search is suspended once the queried vertex is found and
/// resumed by later queries.
class LazySearch final : public ReachabilityAlgorithm {
 public:
  LazySearch(const DiGraph& graph, VertexId source, SearchOrder order);

  std::string name() const override;
  void initialize() override;
  void edge_inserted(VertexId u, VertexId v, EdgeId e) override;
  void edge_deleted(VertexId u, VertexId v, EdgeId e) override;
  bool query(VertexId t) override;

  const CacheState& cache_state() const { return flags_; }
  bool exhausted() const { return search_.exhausted(); }
  bool cached(VertexId v) const { return search_.discovered(v); }

 private:
  void invalidate();

  SuspendableSearch search_;
  CacheState flags_;
};

}  // namespace dynreach
