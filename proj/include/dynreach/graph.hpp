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
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace dynreach {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct Endpoints {
  VertexId tail;
  VertexId head;
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

/// One entry of an incidence list: the edge and the vertex at its other end.
struct Incidence {
  EdgeId edge;
  VertexId other;
};

/// Dynamic directed multigraph with per-vertex in/out incidence lists.
///
/// Edge ids are handed out in increasing order and never reused, so an id
/// identifies one edge for the lifetime of the graph even after removal.
/// Removal swaps the last incidence entry into the freed slot, so list order
/// is not stable across deletions.
class DiGraph {
 public:
  DiGraph() = default;
  explicit DiGraph(std::size_t vertex_count);

  VertexId add_vertex();
  EdgeId add_edge(VertexId u, VertexId v);
  Endpoints remove_edge(EdgeId e);

  /// Most recently inserted live edge (u, v), if any.
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t edge_count() const { return live_edges_; }
  /// One past the largest edge id ever handed out.
  std::size_t edge_id_bound() const { return edges_.size(); }

  bool is_live(EdgeId e) const { return e < edges_.size() && edges_[e].live; }
  /// Valid for every id ever returned by add_edge, live or not.
  Endpoints endpoints(EdgeId e) const { return edges_[e].ends; }
  VertexId tail(EdgeId e) const { return edges_[e].ends.tail; }
  VertexId head(EdgeId e) const { return edges_[e].ends.head; }

  std::span<const Incidence> out_edges(VertexId v) const { return out_[v]; }
  std::span<const Incidence> in_edges(VertexId v) const { return in_[v]; }
  std::size_t out_degree(VertexId v) const { return out_[v].size(); }
  std::size_t in_degree(VertexId v) const { return in_[v].size(); }
  std::size_t degree(VertexId v) const { return out_degree(v) + in_degree(v); }

  /// Full scan of the incidence structure; true iff all internal indices agree.
  bool check_consistency() const;

 private:
  struct EdgeRecord {
    Endpoints ends;
    std::uint32_t out_pos;
    std::uint32_t in_pos;
    bool live;
  };

  static std::uint64_t key(VertexId u, VertexId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  void check_vertex(VertexId v) const;

  std::vector<std::vector<Incidence>> out_;
  std::vector<std::vector<Incidence>> in_;
  std::vector<EdgeRecord> edges_;
  // (u, v) -> live ids in insertion order; back() is the youngest.
  std::unordered_map<std::uint64_t, std::vector<EdgeId>> parallel_;
  std::size_t live_edges_ = 0;
};

}  // namespace dynreach
