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
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "dynreach/sequence.hpp"

namespace testutil {

using dynreach::EdgePair;
using dynreach::Operation;
using dynreach::OperationSequence;
using dynreach::VertexId;

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

/// Edge multiset with its own BFS; shares no code with the library.
class ModelGraph {
 public:
  explicit ModelGraph(std::uint32_t n) : n_(n) {}

  void add(VertexId u, VertexId v) { ++count_[{u, v}]; }
  bool remove(VertexId u, VertexId v) {
    auto it = count_.find({u, v});
    if (it == count_.end()) return false;
    if (--it->second == 0) count_.erase(it);
    return true;
  }
  std::size_t multiplicity(VertexId u, VertexId v) const {
    auto it = count_.find({u, v});
    return it == count_.end() ? 0 : it->second;
  }
  std::size_t edge_count() const {
    std::size_t m = 0;
    for (const auto& [e, c] : count_) m += c;
    return m;
  }
  std::uint32_t n() const { return n_; }

  std::vector<std::uint32_t> distances(VertexId s) const {
    std::vector<std::vector<VertexId>> adj(n_);
    for (const auto& [e, c] : count_) adj[e.first].push_back(e.second);
    std::vector<std::uint32_t> dist(n_, kInf);
    std::deque<VertexId> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop_front();
      for (const VertexId y : adj[x]) {
        if (dist[y] != kInf) continue;
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
    return dist;
  }

  std::vector<EdgePair> live_pairs() const {
    std::vector<EdgePair> out;
    for (const auto& [e, c] : count_)
      for (std::size_t i = 0; i < c; ++i) out.push_back({e.first, e.second});
    return out;
  }

 private:
  std::uint32_t n_;
  std::map<std::pair<VertexId, VertexId>, std::size_t> count_;
};

struct SequenceShape {
  std::uint32_t n = 64;
  std::size_t initial_edges = 96;
  std::size_t sigma = 512;
  double p_insert = 1.0 / 3;
  double p_delete = 1.0 / 3;
  // Chance that an insertion or deletion touches the source.
  double source_bias = 0.05;
};

/// Random strict sequence. Parallel edges and self-loops occur naturally;
/// deletions always name a live edge.
inline OperationSequence random_sequence(const SequenceShape& shape,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 17);
  auto below = [&](std::uint64_t k) { return static_cast<VertexId>(rng() % k); };
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  OperationSequence seq;
  seq.n = shape.n;
  seq.source = below(shape.n);
  std::vector<EdgePair> live;
  auto pick_pair = [&]() -> EdgePair {
    VertexId u = below(shape.n);
    if (unit() < shape.source_bias) u = seq.source;
    return {u, below(shape.n)};
  };
  for (std::size_t i = 0; i < shape.initial_edges; ++i) live.push_back(pick_pair());
  seq.initial_edges = live;
  while (seq.ops.size() < shape.sigma) {
    const double r = unit();
    if (r < shape.p_insert) {
      const EdgePair e = pick_pair();
      live.push_back(e);
      seq.ops.push_back(Operation::add(e.tail, e.head));
    } else if (r < shape.p_insert + shape.p_delete) {
      if (live.empty()) continue;
      std::size_t j = below(live.size());
      // Prefer removing edges that leave the source now and then.
      if (unit() < shape.source_bias) {
        for (std::size_t k = 0; k < live.size(); ++k)
          if (live[k].tail == seq.source) {
            j = k;
            break;
          }
      }
      const EdgePair e = live[j];
      live[j] = live.back();
      live.pop_back();
      seq.ops.push_back(Operation::remove(e.tail, e.head));
    } else {
      seq.ops.push_back(Operation::query(below(shape.n)));
    }
  }
  return seq;
}

}  // namespace testutil
