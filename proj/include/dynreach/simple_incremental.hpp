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
#include <vector>

#include "dynreach/algorithm.hpp"

namespace dynreach {

struct SimpleIncrementalParams {
  bool reverse_order = false;   // process the affected list back to front
  bool forward_search = true;   // forward BFS from every re-reached vertex
  double ratio = 0.25;          // recompute when |affected| > ratio * n
};

/// Maintains an arbitrary reachability tree: amortized O(1) per insertion,
/// and deletions re-certify the subtree under the deleted tree edge by
/// backward searches (or recompute from scratch past the ratio threshold).
class SimpleIncremental final : public ReachabilityAlgorithm {
 public:
  enum class State : std::uint8_t { kUnreachable, kReachable, kUnknown };

  SimpleIncremental(const DiGraph& graph, VertexId source,
                    SimpleIncrementalParams params = {});

  std::string name() const override;
  void initialize() override;
  void edge_inserted(VertexId u, VertexId v, EdgeId e) override;
  void edge_deleted(VertexId u, VertexId v, EdgeId e) override;
  bool query(VertexId t) override { return state_[t] == State::kReachable; }

  const SimpleIncrementalParams& params() const { return params_; }
  State state(VertexId v) const { return state_[v]; }
  EdgeId tree_edge(VertexId v) const { return tree_edge_[v]; }
  /// Size of the affected list built by the last tree-edge deletion; 0 when
  /// the last deletion did not hit a tree edge.
  std::size_t last_affected_size() const { return last_affected_; }

  /// Tree validity: every reachable non-source vertex has a live tree edge
  /// from a reachable tail, parent chains end at the source, child lists
  /// mirror the tree edges, and no vertex is left unknown.
  bool check_tree() const;

 private:
  void recompute();
  void attach(VertexId v, EdgeId e);
  void detach(VertexId v);
  // BFS from the already-claimed vertex `from`, claiming every vertex whose
  // state satisfies `claimable`.
  template <typename Pred>
  void claim_forward(VertexId from, Pred claimable);
  void collect_subtree(VertexId root);
  void repair(VertexId w);

  SimpleIncrementalParams params_;
  std::vector<State> state_;
  std::vector<EdgeId> tree_edge_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<std::uint32_t> child_pos_;
  std::size_t last_affected_ = 0;

  // Scratch, reused across updates.
  std::vector<VertexId> affected_;
  std::vector<VertexId> queue_;
  std::vector<EdgeId> via_;             // backward search: edge toward w
  std::vector<std::uint32_t> stamp_;    // backward search visit marker
  std::uint32_t epoch_ = 0;
};

}  // namespace dynreach
