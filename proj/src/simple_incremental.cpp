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

#include "dynreach/simple_incremental.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace dynreach {

SimpleIncremental::SimpleIncremental(const DiGraph& graph, VertexId source,
                                     SimpleIncrementalParams params)
    : ReachabilityAlgorithm(graph, source), params_(params) {}

std::string SimpleIncremental::name() const {
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%g", params_.ratio);
  return std::string("si:") + (params_.reverse_order ? "R" : "nR") + ":" +
         (params_.forward_search ? "SF" : "nSF") + ":" + ratio;
}

void SimpleIncremental::attach(VertexId v, EdgeId e) {
  tree_edge_[v] = e;
  auto& siblings = children_[graph_.tail(e)];
  child_pos_[v] = static_cast<std::uint32_t>(siblings.size());
  siblings.push_back(v);
}

void SimpleIncremental::detach(VertexId v) {
  if (tree_edge_[v] == kNoEdge) return;
  auto& siblings = children_[graph_.tail(tree_edge_[v])];
  const VertexId last = siblings.back();
  siblings[child_pos_[v]] = last;
  child_pos_[last] = child_pos_[v];
  siblings.pop_back();
  tree_edge_[v] = kNoEdge;
}

template <typename Pred>
void SimpleIncremental::claim_forward(VertexId from, Pred claimable) {
  queue_.clear();
  queue_.push_back(from);
  for (std::size_t i = 0; i < queue_.size(); ++i) {
    const VertexId x = queue_[i];
    ++counters_.queue_pops;
    for (const auto& inc : graph_.out_edges(x)) {
      ++counters_.edges_scanned;
      const VertexId w = inc.other;
      if (!claimable(state_[w])) continue;
      state_[w] = State::kReachable;
      attach(w, inc.edge);
      ++counters_.vertices_visited;
      queue_.push_back(w);
    }
  }
}

void SimpleIncremental::recompute() {
  const std::size_t n = graph_.vertex_count();
  state_.assign(n, State::kUnreachable);
  tree_edge_.assign(n, kNoEdge);
  children_.resize(n);
  for (auto& c : children_) c.clear();
  child_pos_.assign(n, 0);
  via_.resize(n);
  stamp_.assign(n, 0);
  epoch_ = 0;

  state_[source_] = State::kReachable;
  ++counters_.vertices_visited;
  claim_forward(source_, [](State s) { return s != State::kReachable; });
}

void SimpleIncremental::initialize() { recompute(); }

void SimpleIncremental::edge_inserted(VertexId u, VertexId v, EdgeId e) {
  if (state_[u] != State::kReachable || state_[v] == State::kReachable) return;
  state_[v] = State::kReachable;
  attach(v, e);
  ++counters_.vertices_visited;
  claim_forward(v, [](State s) { return s != State::kReachable; });
}

void SimpleIncremental::collect_subtree(VertexId root) {
  affected_.clear();
  queue_.clear();
  queue_.push_back(root);
  while (!queue_.empty()) {
    const VertexId x = queue_.back();
    queue_.pop_back();
    affected_.push_back(x);
    ++counters_.edges_scanned;  // the tree link that led here
    const auto& kids = children_[x];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) queue_.push_back(*it);
  }
}

void SimpleIncremental::repair(VertexId w) {
  if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 0;
  }
  ++epoch_;
  stamp_[w] = epoch_;
  queue_.clear();
  queue_.push_back(w);
  ++counters_.vertices_visited;

  // Backward BFS over unknown vertices until a reachable tail shows up.
  EdgeId found = kNoEdge;
  for (std::size_t i = 0; i < queue_.size() && found == kNoEdge; ++i) {
    const VertexId y = queue_[i];
    ++counters_.queue_pops;
    for (const auto& inc : graph_.in_edges(y)) {
      ++counters_.edges_scanned;
      const VertexId x = inc.other;
      const State s = state_[x];
      if (s == State::kReachable) {
        found = inc.edge;
        break;
      }
      if (s == State::kUnreachable || stamp_[x] == epoch_) continue;
      stamp_[x] = epoch_;
      via_[x] = inc.edge;
      ++counters_.vertices_visited;
      queue_.push_back(x);
    }
  }

  if (found == kNoEdge) {
    for (const VertexId x : queue_) state_[x] = State::kUnreachable;
    return;
  }

  // Hang the discovered path x -> ... -> w into the tree.
  for (EdgeId f = found;;) {
    const VertexId y = graph_.head(f);
    state_[y] = State::kReachable;
    attach(y, f);
    if (y == w) break;
    f = via_[y];
  }
  if (params_.forward_search)
    claim_forward(w, [](State s) { return s == State::kUnknown; });
}

void SimpleIncremental::edge_deleted(VertexId, VertexId v, EdgeId e) {
  last_affected_ = 0;
  if (tree_edge_[v] != e) return;

  detach(v);
  collect_subtree(v);
  last_affected_ = affected_.size();
  if (static_cast<double>(affected_.size()) >
      params_.ratio * static_cast<double>(graph_.vertex_count())) {
    recompute();
    ++counters_.recomputations;
    return;
  }

  for (const VertexId w : affected_) {
    state_[w] = State::kUnknown;
    tree_edge_[w] = kNoEdge;
    children_[w].clear();
  }
  const std::size_t k = affected_.size();
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId w = affected_[params_.reverse_order ? k - 1 - i : i];
    if (state_[w] == State::kUnknown) repair(w);
  }
}

bool SimpleIncremental::check_tree() const {
  const std::size_t n = graph_.vertex_count();
  if (state_.size() != n) return false;
  if (state_[source_] != State::kReachable || tree_edge_[source_] != kNoEdge)
    return false;
  std::size_t tree_edges = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (state_[v] == State::kUnknown) return false;
    if (v == source_) continue;
    const EdgeId e = tree_edge_[v];
    if (state_[v] == State::kUnreachable) {
      if (e != kNoEdge) return false;
      continue;
    }
    if (e == kNoEdge || !graph_.is_live(e) || graph_.head(e) != v) return false;
    const VertexId p = graph_.tail(e);
    if (state_[p] != State::kReachable) return false;
    if (child_pos_[v] >= children_[p].size() || children_[p][child_pos_[v]] != v)
      return false;
    ++tree_edges;
    VertexId x = v;
    std::size_t steps = 0;
    while (x != source_) {
      if (++steps > n) return false;  // cycle
      x = graph_.tail(tree_edge_[x]);
    }
  }
  std::size_t listed = 0;
  for (const auto& c : children_) listed += c.size();
  return listed == tree_edges;
}

}  // namespace dynreach
