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
#include <vector>

#include "dynreach/algorithm.hpp"

namespace dynreach {

inline constexpr std::uint32_t kUnlimitedBeta =
    std::numeric_limits<std::uint32_t>::max();
inline constexpr std::uint32_t kInfiniteLevel = kUnreachableDistance;

/// Abort thresholds for a single deletion. Exceeding either one discards the
/// repair and rebuilds from scratch.
struct EsParams {
  // Max insertions of one vertex into the repair queue.
  std::uint32_t beta = kUnlimitedBeta;
  // Max queue pops, as a multiple of n.
  double ratio = std::numeric_limits<double>::infinity();
};

/// Shared part of the BFS-tree (Even-Shiloach) algorithms: levels, the
/// FIFO repair queue with its per-deletion thresholds, and O(1) queries.
class EsTreeBase : public ReachabilityAlgorithm {
 public:
  bool query(VertexId t) override { return level_[t] != kInfiniteLevel; }

  const EsParams& params() const { return params_; }
  std::uint32_t level(VertexId v) const { return level_[v]; }
  const std::vector<std::uint32_t>& levels() const { return level_; }
  virtual EdgeId tree_edge(VertexId v) const = 0;

  /// Max queue insertions of any single vertex in the last deletion.
  std::uint32_t last_max_insertions() const { return last_max_insertions_; }
  std::uint64_t last_queue_pops() const { return last_pops_; }

  /// Levels consistent with tree edges: every reachable v != s has a live
  /// tree edge into v whose tail sits exactly one level up.
  virtual bool check_invariants() const;

 protected:
  EsTreeBase(const DiGraph& graph, VertexId source, EsParams params)
      : ReachabilityAlgorithm(graph, source), params_(params) {}

  std::string param_suffix() const;

  enum class Pop { kVertex, kEmpty, kAbort };

  // Repair queue for one deletion. enqueue() returns false and next()
  // returns kAbort once beta or ratio is exceeded; end_repair(true) then
  // rebuilds from scratch.
  void begin_repair();
  bool enqueue(VertexId w);
  Pop next(VertexId& w);
  void end_repair(bool aborted);

  EsParams params_;
  std::vector<std::uint32_t> level_;
  std::vector<VertexId> insert_queue_;  // BFS scratch for insertions

 private:
  std::vector<VertexId> queue_;
  std::size_t queue_head_ = 0;
  std::vector<char> in_queue_;
  std::vector<std::uint32_t> insertions_;
  std::vector<VertexId> touched_;
  std::uint64_t pops_ = 0;
  std::uint32_t last_max_insertions_ = 0;
  std::uint64_t last_pops_ = 0;
};

enum class EsVariant {
  kClassic,     // ES: raise a level by one, rescan on every level
  kMultiLevel,  // MES: one cyclic scan finds the new level directly
};

/// ES and MES: per-vertex ordered in-edge list, an edge -> position index,
/// and the position of the tree edge within the list.
class EvenShiloach final : public EsTreeBase {
 public:
  EvenShiloach(const DiGraph& graph, VertexId source, EsVariant variant,
               EsParams params = {});

  std::string name() const override;
  void initialize() override;
  void edge_inserted(VertexId u, VertexId v, EdgeId e) override;
  void edge_deleted(VertexId u, VertexId v, EdgeId e) override;

  EdgeId tree_edge(VertexId v) const override;
  EsVariant variant() const { return variant_; }
  bool check_invariants() const override;
  /// ES only: no in-edge before the tree edge has its tail one level up.
  bool check_minimal_tree_index() const;

 private:
  void push_in_edge(VertexId v, EdgeId e);
  bool is_parent_edge(EdgeId f, std::uint32_t lvl) const;
  void relax_from(EdgeId e);
  bool enqueue_children(VertexId w);
  bool process_classic(VertexId w);
  bool process_multi_level(VertexId w);

  EsVariant variant_;
  std::vector<std::vector<EdgeId>> in_list_;
  std::vector<std::uint32_t> in_pos_;
  std::vector<std::uint32_t> tree_idx_;
};

/// SES: no ordered in-edge list; a direct tree-edge pointer per vertex. Each
/// vertex taken from the queue scans its in-edges for a tail of minimum
/// level, stopping at the first tail one level up.
class SimplifiedEvenShiloach final : public EsTreeBase {
 public:
  SimplifiedEvenShiloach(const DiGraph& graph, VertexId source,
                         EsParams params = {});

  std::string name() const override;
  void initialize() override;
  void edge_inserted(VertexId u, VertexId v, EdgeId e) override;
  void edge_deleted(VertexId u, VertexId v, EdgeId e) override;

  EdgeId tree_edge(VertexId v) const override { return tree_edge_[v]; }

 private:
  bool enqueue_children(VertexId w);
  bool process(VertexId w);

  std::vector<EdgeId> tree_edge_;
};

}  // namespace dynreach
