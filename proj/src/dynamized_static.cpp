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

#include "dynreach/dynamized_static.hpp"

namespace dynreach {

namespace {

std::string with_order(const char* prefix, SearchOrder order) {
  return std::string(prefix) + (order == SearchOrder::kBfs ? "bfs" : "dfs");
}

}  // namespace

void SuspendableSearch::restart(VertexId source, Counters& counters) {
  seen_.assign(graph_.vertex_count(), 0);
  frontier_.clear();
  seen_[source] = 1;
  ++counters.vertices_visited;
  frontier_.push_back({source, 0});
}

bool SuspendableSearch::advance_until(VertexId target, Counters& counters) {
  if (target != kNoTarget && seen_[target]) return true;
  while (!frontier_.empty()) {
    Frame& frame =
        order_ == SearchOrder::kBfs ? frontier_.front() : frontier_.back();
    const auto outs = graph_.out_edges(frame.vertex);
    if (frame.next < outs.size()) {
      const VertexId w = outs[frame.next++].other;
      ++counters.edges_scanned;
      if (!seen_[w]) {
        seen_[w] = 1;
        ++counters.vertices_visited;
        frontier_.push_back({w, 0});
        if (w == target) return true;
      }
      continue;
    }
    if (order_ == SearchOrder::kBfs) {
      frontier_.pop_front();
    } else {
      frontier_.pop_back();
    }
    ++counters.queue_pops;
  }
  return target != kNoTarget && seen_[target];
}

void SuspendableSearch::run_to_exhaustion(Counters& counters) {
  advance_until(kNoTarget, counters);
}

// --- SBFS / SDFS ------------------------------------------------------------

StaticSearch::StaticSearch(const DiGraph& graph, VertexId source,
                           SearchOrder order)
    : ReachabilityAlgorithm(graph, source), search_(graph, order) {}

std::string StaticSearch::name() const { return with_order("s", search_.order()); }

bool StaticSearch::query(VertexId t) {
  search_.restart(source_, counters_);
  search_.run_to_exhaustion(counters_);
  return search_.discovered(t);
}

// --- CBFS / CDFS ------------------------------------------------------------

CachingSearch::CachingSearch(const DiGraph& graph, VertexId source,
                             SearchOrder order)
    : ReachabilityAlgorithm(graph, source), search_(graph, order) {}

std::string CachingSearch::name() const {
  return with_order("c", search_.order());
}

void CachingSearch::recompute() {
  search_.restart(source_, counters_);
  search_.run_to_exhaustion(counters_);
  flags_ = {};
}

void CachingSearch::initialize() { recompute(); }

void CachingSearch::edge_inserted(VertexId u, VertexId v, EdgeId) {
  if (cached(u) && !cached(v)) flags_.critical_insertion_seen = true;
}

void CachingSearch::edge_deleted(VertexId, VertexId v, EdgeId) {
  if (cached(v)) flags_.critical_deletion_seen = true;
}

bool CachingSearch::query(VertexId t) {
  const bool c = cached(t);
  if ((flags_.critical_insertion_seen && !c) ||
      (flags_.critical_deletion_seen && c)) {
    recompute();
    ++counters_.recomputations;
  }
  return cached(t);
}

// --- LBFS / LDFS ------------------------------------------------------------

LazySearch::LazySearch(const DiGraph& graph, VertexId source, SearchOrder order)
    : ReachabilityAlgorithm(graph, source), search_(graph, order) {}

std::string LazySearch::name() const { return with_order("l", search_.order()); }

void LazySearch::initialize() {
  search_.restart(source_, counters_);
  search_.run_to_exhaustion(counters_);
  flags_ = {};
}

void LazySearch::invalidate() {
  search_.restart(source_, counters_);
  flags_ = {};
  ++counters_.recomputations;
}

// Undiscovered vertices count as unreachable here, so an insertion out of a
// discovered vertex into one the suspended search has not reached yet is
// flagged too.
void LazySearch::edge_inserted(VertexId u, VertexId v, EdgeId) {
  if (cached(u) && !cached(v)) flags_.critical_insertion_seen = true;
}

void LazySearch::edge_deleted(VertexId, VertexId v, EdgeId) {
  if (cached(v)) flags_.critical_deletion_seen = true;
}

bool LazySearch::query(VertexId t) {
  const bool c = cached(t);
  if (c && !flags_.critical_deletion_seen) return true;
  if (!c && !flags_.critical_insertion_seen) {
    if (search_.exhausted()) return false;
    // A suspended search may hold frontier vertices that a critical deletion
    // cut off; only resume it when no such deletion happened.
    if (!flags_.critical_deletion_seen)
      return search_.advance_until(t, counters_);
  }
  invalidate();
  return search_.advance_until(t, counters_);
}

}  // namespace dynreach
