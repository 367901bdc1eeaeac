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

#include <deque>

#include "dynreach/algorithm.hpp"

namespace dynreach {

std::vector<std::uint32_t> oracle_distances(const DiGraph& g, VertexId s) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachableDistance);
  std::deque<VertexId> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.out_edges(x)) {
      if (dist[inc.other] == kUnreachableDistance) {
        dist[inc.other] = dist[x] + 1;
        queue.push_back(inc.other);
      }
    }
  }
  return dist;
}

std::vector<bool> oracle_reachable_set(const DiGraph& g, VertexId s) {
  const auto dist = oracle_distances(g, s);
  std::vector<bool> reach(dist.size());
  for (std::size_t v = 0; v < dist.size(); ++v)
    reach[v] = dist[v] != kUnreachableDistance;
  return reach;
}

bool oracle_reachable(const DiGraph& g, VertexId s, VertexId t) {
  return oracle_reachable_set(g, s)[t];
}

}  // namespace dynreach
