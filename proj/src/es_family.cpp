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

#include "dynreach/es_family.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace dynreach {

// --- shared queue machinery ---------------------------------------------------

std::string EsTreeBase::param_suffix() const {
  std::string s = params_.beta == kUnlimitedBeta
                      ? std::string("inf")
                      : std::to_string(params_.beta);
  s += ':';
  if (std::isinf(params_.ratio)) {
    s += "inf";
  } else {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", params_.ratio);
    s += buf;
  }
  return s;
}

void EsTreeBase::begin_repair() {
  const std::size_t n = level_.size();
  if (in_queue_.size() != n) {
    in_queue_.assign(n, 0);
    insertions_.assign(n, 0);
  }
  queue_.clear();
  queue_head_ = 0;
  touched_.clear();
  pops_ = 0;
}

bool EsTreeBase::enqueue(VertexId w) {
  if (in_queue_[w]) return true;
  if (insertions_[w] >= params_.beta) return false;
  if (insertions_[w]++ == 0) touched_.push_back(w);
  in_queue_[w] = 1;
  queue_.push_back(w);
  return true;
}

EsTreeBase::Pop EsTreeBase::next(VertexId& w) {
  if (queue_head_ == queue_.size()) return Pop::kEmpty;
  ++pops_;
  ++counters_.queue_pops;
  if (static_cast<double>(pops_) >
      params_.ratio * static_cast<double>(level_.size()))
    return Pop::kAbort;
  w = queue_[queue_head_++];
  in_queue_[w] = 0;
  return Pop::kVertex;
}

void EsTreeBase::end_repair(bool aborted) {
  last_max_insertions_ = 0;
  for (const VertexId w : touched_) {
    last_max_insertions_ = std::max(last_max_insertions_, insertions_[w]);
    insertions_[w] = 0;
    in_queue_[w] = 0;
  }
  last_pops_ = pops_;
  if (aborted) {
    initialize();
    ++counters_.recomputations;
  }
}

bool EsTreeBase::check_invariants() const {
  const std::size_t n = graph_.vertex_count();
  if (level_.size() != n || level_[source_] != 0) return false;
  for (VertexId v = 0; v < n; ++v) {
    if (v == source_) continue;
    if (level_[v] == kInfiniteLevel) continue;
    if (level_[v] >= n) return false;
    const EdgeId e = tree_edge(v);
    if (e == kNoEdge || !graph_.is_live(e) || graph_.head(e) != v) return false;
    if (level_[graph_.tail(e)] + 1 != level_[v]) return false;
  }
  // No edge can leave a finite level more than one level behind its head.
  for (VertexId x = 0; x < n; ++x) {
    if (level_[x] == kInfiniteLevel) continue;
    for (const auto& inc : graph_.out_edges(x))
      if (level_[inc.other] > level_[x] + 1) return false;
  }
  return true;
}

// --- ES / MES -----------------------------------------------------------------

EvenShiloach::EvenShiloach(const DiGraph& graph, VertexId source,
                           EsVariant variant, EsParams params)
    : EsTreeBase(graph, source, params), variant_(variant) {}

std::string EvenShiloach::name() const {
  return (variant_ == EsVariant::kClassic ? "es:" : "mes:") + param_suffix();
}

EdgeId EvenShiloach::tree_edge(VertexId v) const {
  if (v == source_ || level_[v] == kInfiniteLevel) return kNoEdge;
  const auto& list = in_list_[v];
  return tree_idx_[v] < list.size() ? list[tree_idx_[v]] : kNoEdge;
}

void EvenShiloach::push_in_edge(VertexId v, EdgeId e) {
  if (e >= in_pos_.size())
    in_pos_.resize(std::max<std::size_t>(e + 1, 2 * in_pos_.size()));
  in_pos_[e] = static_cast<std::uint32_t>(in_list_[v].size());
  in_list_[v].push_back(e);
}

bool EvenShiloach::is_parent_edge(EdgeId f, std::uint32_t lvl) const {
  const std::uint32_t tl = level_[graph_.tail(f)];
  return tl != kInfiniteLevel && tl + 1 == lvl;
}

void EvenShiloach::initialize() {
  const std::size_t n = graph_.vertex_count();
  level_.assign(n, kInfiniteLevel);
  tree_idx_.assign(n, 0);
  in_list_.resize(n);
  for (auto& l : in_list_) l.clear();
  in_pos_.assign(graph_.edge_id_bound(), 0);

  // In-lists are filled in the order the BFS meets the edges, so the first
  // entry of every reachable vertex is its tree edge.
  auto& queue = insert_queue_;
  queue.clear();
  level_[source_] = 0;
  ++counters_.vertices_visited;
  queue.push_back(source_);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const VertexId x = queue[i];
    ++counters_.queue_pops;
    for (const auto& inc : graph_.out_edges(x)) {
      ++counters_.edges_scanned;
      const VertexId w = inc.other;
      push_in_edge(w, inc.edge);
      if (level_[w] == kInfiniteLevel) {
        level_[w] = level_[x] + 1;
        tree_idx_[w] = static_cast<std::uint32_t>(in_list_[w].size() - 1);
        ++counters_.vertices_visited;
        queue.push_back(w);
      }
    }
  }
  for (VertexId x = 0; x < n; ++x) {
    if (level_[x] != kInfiniteLevel) continue;
    for (const auto& inc : graph_.out_edges(x)) {
      ++counters_.edges_scanned;
      push_in_edge(inc.other, inc.edge);
    }
  }
}

// BFS from the new edge. Each edge (x, w) met is offered to w, which adopts
// it if it lowers w's level or, at equal level, sits earlier in w's in-list.
void EvenShiloach::relax_from(EdgeId e) {
  auto& queue = insert_queue_;
  queue.clear();
  auto offer = [&](EdgeId f) {
    const VertexId x = graph_.tail(f);
    const VertexId w = graph_.head(f);
    if (level_[x] == kInfiniteLevel) return;
    const std::uint32_t candidate = level_[x] + 1;
    if (candidate < level_[w]) {
      level_[w] = candidate;
      tree_idx_[w] = in_pos_[f];
      ++counters_.vertices_visited;
      queue.push_back(w);
    } else if (candidate == level_[w] && w != source_ &&
               in_pos_[f] < tree_idx_[w]) {
      tree_idx_[w] = in_pos_[f];
    }
  };
  offer(e);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const VertexId x = queue[i];
    ++counters_.queue_pops;
    for (const auto& inc : graph_.out_edges(x)) {
      ++counters_.edges_scanned;
      offer(inc.edge);
    }
  }
}

void EvenShiloach::edge_inserted(VertexId, VertexId v, EdgeId e) {
  push_in_edge(v, e);
  relax_from(e);
}

bool EvenShiloach::enqueue_children(VertexId w) {
  for (const auto& inc : graph_.out_edges(w)) {
    ++counters_.edges_scanned;
    const VertexId y = inc.other;
    if (y == source_ || level_[y] == kInfiniteLevel) continue;
    if (tree_idx_[y] == in_pos_[inc.edge] && !enqueue(y)) return false;
  }
  return true;
}

bool EvenShiloach::process_classic(VertexId w) {
  if (level_[w] == kInfiniteLevel) return true;
  const auto& list = in_list_[w];
  std::uint32_t idx = tree_idx_[w];
  for (; idx < list.size(); ++idx) {
    ++counters_.edges_scanned;
    if (is_parent_edge(list[idx], level_[w])) {
      tree_idx_[w] = idx;
      return true;
    }
  }
  // No parent left on this level: w moves down and takes its subtree along.
  if (!enqueue_children(w)) return false;
  tree_idx_[w] = 0;
  if (level_[w] + 1 < level_.size()) {
    ++level_[w];
    return enqueue(w);
  }
  level_[w] = kInfiniteLevel;
  return true;
}

bool EvenShiloach::process_multi_level(VertexId w) {
  if (level_[w] == kInfiniteLevel) return true;
  const auto& list = in_list_[w];
  const auto size = static_cast<std::uint32_t>(list.size());
  const std::uint32_t start = std::min(tree_idx_[w], size);

  std::uint32_t best_level = kInfiniteLevel;
  std::uint32_t best_idx = 0;
  // One cyclic pass from the old index; stop early on a tail one level up.
  for (std::uint32_t k = 0; k < size; ++k) {
    const std::uint32_t idx = start + k < size ? start + k : start + k - size;
    ++counters_.edges_scanned;
    const VertexId x = graph_.tail(list[idx]);
    if (x == w) continue;  // a self-loop never supports its own head
    const std::uint32_t tl = level_[x];
    if (tl == kInfiniteLevel) continue;
    if (tl + 1 == level_[w]) {
      tree_idx_[w] = idx;
      return true;
    }
    if (tl < best_level) {
      best_level = tl;
      best_idx = idx;
    }
  }

  if (!enqueue_children(w)) return false;
  if (best_level == kInfiniteLevel || best_level + 1 >= level_.size()) {
    level_[w] = kInfiniteLevel;
    tree_idx_[w] = 0;
    return true;
  }
  level_[w] = best_level + 1;
  tree_idx_[w] = best_idx;
  return true;
}

void EvenShiloach::edge_deleted(VertexId, VertexId v, EdgeId e) {
  auto& list = in_list_[v];
  const std::uint32_t pos = in_pos_[e];
  const bool reachable = v != source_ && level_[v] != kInfiniteLevel;
  const bool was_tree = reachable && pos == tree_idx_[v];

  const EdgeId moved = list.back();
  list[pos] = moved;
  in_pos_[moved] = pos;
  list.pop_back();

  if (!was_tree) {
    if (reachable && moved != e) {
      if (tree_idx_[v] == list.size()) {
        tree_idx_[v] = pos;  // the tree edge itself was swapped forward
      } else if (pos < tree_idx_[v] && is_parent_edge(moved, level_[v])) {
        tree_idx_[v] = pos;
      }
    }
    return;
  }

  begin_repair();
  bool aborted = !enqueue(v);
  VertexId w;
  while (!aborted) {
    const Pop p = next(w);
    if (p == Pop::kEmpty) break;
    if (p == Pop::kAbort) {
      aborted = true;
      break;
    }
    aborted = variant_ == EsVariant::kClassic ? !process_classic(w)
                                               : !process_multi_level(w);
  }
  end_repair(aborted);
}

bool EvenShiloach::check_invariants() const {
  if (!EsTreeBase::check_invariants()) return false;
  for (VertexId v = 0; v < in_list_.size(); ++v) {
    if (in_list_[v].size() != graph_.in_degree(v)) return false;
    for (std::uint32_t i = 0; i < in_list_[v].size(); ++i) {
      const EdgeId f = in_list_[v][i];
      if (!graph_.is_live(f) || graph_.head(f) != v || in_pos_[f] != i)
        return false;
    }
  }
  return true;
}

bool EvenShiloach::check_minimal_tree_index() const {
  for (VertexId v = 0; v < in_list_.size(); ++v) {
    if (v == source_ || level_[v] == kInfiniteLevel) continue;
    for (std::uint32_t i = 0; i < tree_idx_[v]; ++i)
      if (is_parent_edge(in_list_[v][i], level_[v])) return false;
  }
  return true;
}

// --- SES ----------------------------------------------------------------------

SimplifiedEvenShiloach::SimplifiedEvenShiloach(const DiGraph& graph,
                                               VertexId source, EsParams params)
    : EsTreeBase(graph, source, params) {}

std::string SimplifiedEvenShiloach::name() const {
  return "ses:" + param_suffix();
}

void SimplifiedEvenShiloach::initialize() {
  const std::size_t n = graph_.vertex_count();
  level_.assign(n, kInfiniteLevel);
  tree_edge_.assign(n, kNoEdge);
  auto& queue = insert_queue_;
  queue.clear();
  level_[source_] = 0;
  ++counters_.vertices_visited;
  queue.push_back(source_);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const VertexId x = queue[i];
    ++counters_.queue_pops;
    for (const auto& inc : graph_.out_edges(x)) {
      ++counters_.edges_scanned;
      const VertexId w = inc.other;
      if (level_[w] != kInfiniteLevel) continue;
      level_[w] = level_[x] + 1;
      tree_edge_[w] = inc.edge;
      ++counters_.vertices_visited;
      queue.push_back(w);
    }
  }
}

void SimplifiedEvenShiloach::edge_inserted(VertexId u, VertexId v, EdgeId e) {
  if (level_[u] == kInfiniteLevel || level_[u] + 1 >= level_[v]) return;
  auto& queue = insert_queue_;
  queue.clear();
  level_[v] = level_[u] + 1;
  tree_edge_[v] = e;
  ++counters_.vertices_visited;
  queue.push_back(v);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const VertexId x = queue[i];
    ++counters_.queue_pops;
    for (const auto& inc : graph_.out_edges(x)) {
      ++counters_.edges_scanned;
      const VertexId w = inc.other;
      if (level_[x] + 1 >= level_[w]) continue;
      level_[w] = level_[x] + 1;
      tree_edge_[w] = inc.edge;
      ++counters_.vertices_visited;
      queue.push_back(w);
    }
  }
}

bool SimplifiedEvenShiloach::enqueue_children(VertexId w) {
  for (const auto& inc : graph_.out_edges(w)) {
    ++counters_.edges_scanned;
    const VertexId y = inc.other;
    if (tree_edge_[y] == inc.edge && !enqueue(y)) return false;
  }
  return true;
}

bool SimplifiedEvenShiloach::process(VertexId w) {
  if (level_[w] == kInfiniteLevel) return true;
  std::uint32_t best_level = kInfiniteLevel;
  EdgeId best = kNoEdge;
  for (const auto& inc : graph_.in_edges(w)) {
    ++counters_.edges_scanned;
    if (inc.other == w) continue;
    const std::uint32_t tl = level_[inc.other];
    if (tl < best_level) {
      best_level = tl;
      best = inc.edge;
      // No tail can sit more than one level above w, so this is a minimum.
      if (tl + 1 == level_[w]) break;
    }
  }
  if (best == kNoEdge || best_level + 1 >= level_.size()) {
    if (!enqueue_children(w)) return false;
    level_[w] = kInfiniteLevel;
    tree_edge_[w] = kNoEdge;
    return true;
  }
  const std::uint32_t new_level = best_level + 1;
  if (new_level > level_[w] && !enqueue_children(w)) return false;
  level_[w] = new_level;
  tree_edge_[w] = best;
  return true;
}

void SimplifiedEvenShiloach::edge_deleted(VertexId, VertexId v, EdgeId e) {
  if (v == source_ || tree_edge_[v] != e) return;
  begin_repair();
  bool aborted = !enqueue(v);
  VertexId w;
  while (!aborted) {
    const Pop p = next(w);
    if (p == Pop::kEmpty) break;
    if (p == Pop::kAbort) {
      aborted = true;
      break;
    }
    aborted = !process(w);
  }
  end_repair(aborted);
}

}  // namespace dynreach
