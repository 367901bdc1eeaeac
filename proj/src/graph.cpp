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

#include "dynreach/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dynreach {

DiGraph::DiGraph(std::size_t vertex_count)
    : out_(vertex_count), in_(vertex_count) {}

VertexId DiGraph::add_vertex() {
  out_.emplace_back();
  in_.emplace_back();
  return static_cast<VertexId>(out_.size() - 1);
}

void DiGraph::check_vertex(VertexId v) const {
  if (v >= out_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range (n=" + std::to_string(out_.size()) +
                            ")");
  }
}

EdgeId DiGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  const auto e = static_cast<EdgeId>(edges_.size());
  edges_.push_back({{u, v},
                    static_cast<std::uint32_t>(out_[u].size()),
                    static_cast<std::uint32_t>(in_[v].size()),
                    true});
  out_[u].push_back({e, v});
  in_[v].push_back({e, u});
  parallel_[key(u, v)].push_back(e);
  ++live_edges_;
  return e;
}

Endpoints DiGraph::remove_edge(EdgeId e) {
  if (!is_live(e)) {
    throw std::invalid_argument("edge " + std::to_string(e) + " is not live");
  }
  EdgeRecord& rec = edges_[e];
  const auto [u, v] = rec.ends;

  auto& outs = out_[u];
  const Incidence moved_out = outs.back();
  outs[rec.out_pos] = moved_out;
  edges_[moved_out.edge].out_pos = rec.out_pos;
  outs.pop_back();

  auto& ins = in_[v];
  const Incidence moved_in = ins.back();
  ins[rec.in_pos] = moved_in;
  edges_[moved_in.edge].in_pos = rec.in_pos;
  ins.pop_back();

  auto it = parallel_.find(key(u, v));
  auto& ids = it->second;
  if (ids.back() == e) {
    ids.pop_back();
  } else {
    ids.erase(std::find(ids.begin(), ids.end(), e));
  }
  if (ids.empty()) parallel_.erase(it);

  rec.live = false;
  --live_edges_;
  return rec.ends;
}

std::optional<EdgeId> DiGraph::find_edge(VertexId u, VertexId v) const {
  auto it = parallel_.find(key(u, v));
  if (it == parallel_.end()) return std::nullopt;
  return it->second.back();
}

bool DiGraph::check_consistency() const {
  std::size_t out_total = 0;
  std::size_t in_total = 0;
  for (VertexId v = 0; v < out_.size(); ++v) {
    for (std::size_t i = 0; i < out_[v].size(); ++i) {
      const auto& inc = out_[v][i];
      if (!is_live(inc.edge)) return false;
      const auto& rec = edges_[inc.edge];
      if (rec.ends.tail != v || rec.ends.head != inc.other || rec.out_pos != i)
        return false;
    }
    for (std::size_t i = 0; i < in_[v].size(); ++i) {
      const auto& inc = in_[v][i];
      if (!is_live(inc.edge)) return false;
      const auto& rec = edges_[inc.edge];
      if (rec.ends.head != v || rec.ends.tail != inc.other || rec.in_pos != i)
        return false;
    }
    out_total += out_[v].size();
    in_total += in_[v].size();
  }
  std::size_t indexed = 0;
  for (const auto& [k, ids] : parallel_) indexed += ids.size();
  return out_total == live_edges_ && in_total == live_edges_ &&
         indexed == live_edges_;
}

}  // namespace dynreach
