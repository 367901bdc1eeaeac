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

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "dynreach/graph.hpp"
#include "test_util.hpp"

using dynreach::DiGraph;
using dynreach::EdgeId;
using dynreach::Endpoints;

TEST_CASE("add_vertex numbers densely") {
  DiGraph g;
  CHECK(g.add_vertex() == 0);
  CHECK(g.vertex_count() == 1);
  DiGraph h(3);
  CHECK(h.add_vertex() == 3);
  DiGraph big;
  for (int i = 0; i < 100000; ++i) big.add_vertex();
  CHECK(big.vertex_count() == 100000);
}

TEST_CASE("add_edge updates degrees and allows parallels and loops") {
  DiGraph g(3);
  const EdgeId e = g.add_edge(0, 1);
  CHECK(e == 0);
  CHECK(g.out_degree(0) == 1);
  CHECK(g.in_degree(1) == 1);

  const EdgeId f = g.add_edge(0, 1);
  CHECK(f != e);
  CHECK(g.is_live(e));
  CHECK(g.is_live(f));
  CHECK(g.edge_count() == 2);

  g.add_edge(2, 2);
  CHECK(g.out_degree(2) == 1);
  CHECK(g.in_degree(2) == 1);
  CHECK(g.degree(2) == 2);
  CHECK(g.check_consistency());

  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  CHECK_THROWS_AS(g.add_edge(7, 0), std::out_of_range);
}

TEST_CASE("remove_edge") {
  DiGraph g(2);
  const EdgeId e = g.add_edge(0, 1);
  CHECK(g.remove_edge(e) == Endpoints{0, 1});
  CHECK(g.out_degree(0) == 0);
  CHECK(g.in_degree(1) == 0);
  CHECK(g.edge_count() == 0);
  CHECK_THROWS_AS(g.remove_edge(e), std::invalid_argument);
  CHECK_THROWS_AS(g.remove_edge(12345), std::invalid_argument);

  const EdgeId a = g.add_edge(0, 1);
  const EdgeId b = g.add_edge(0, 1);
  g.remove_edge(a);
  CHECK(g.is_live(b));
  CHECK(g.edge_count() == 1);
  // Dead ids keep their endpoints and are never handed out again.
  CHECK(g.endpoints(a) == Endpoints{0, 1});
  CHECK(g.add_edge(1, 0) > b);
}

TEST_CASE("find_edge returns the youngest live parallel edge") {
  DiGraph g(2);
  CHECK_FALSE(g.find_edge(0, 1).has_value());
  const EdgeId e0 = g.add_edge(0, 1);
  CHECK(g.find_edge(0, 1) == e0);
  const EdgeId e1 = g.add_edge(0, 1);
  CHECK(g.find_edge(0, 1) == e1);
  g.remove_edge(e1);
  CHECK(g.find_edge(0, 1) == e0);
  g.remove_edge(e0);
  CHECK_FALSE(g.find_edge(0, 1).has_value());
  CHECK_FALSE(g.find_edge(1, 0).has_value());
}

TEST_CASE("property: random add/remove interleavings against a multiset") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng(seed);
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 20);
    DiGraph g(n);
    testutil::ModelGraph model(n);
    std::vector<EdgeId> live;
    std::size_t inserted = 0, deleted = 0;
    for (int step = 0; step < 400; ++step) {
      if (live.empty() || rng() % 3 != 0) {
        const auto u = static_cast<dynreach::VertexId>(rng() % n);
        const auto v = static_cast<dynreach::VertexId>(rng() % n);
        live.push_back(g.add_edge(u, v));
        model.add(u, v);
        ++inserted;
      } else {
        const std::size_t j = rng() % live.size();
        const Endpoints ends = g.remove_edge(live[j]);
        REQUIRE(model.remove(ends.tail, ends.head));
        live[j] = live.back();
        live.pop_back();
        ++deleted;
      }
      if (step % 25 == 0) REQUIRE(g.check_consistency());
    }
    CHECK(g.check_consistency());
    CHECK(g.edge_count() == inserted - deleted);
    CHECK(g.edge_count() == model.edge_count());
    std::size_t out_sum = 0, in_sum = 0;
    for (dynreach::VertexId v = 0; v < n; ++v) {
      out_sum += g.out_degree(v);
      in_sum += g.in_degree(v);
      CHECK(g.degree(v) == g.out_degree(v) + g.in_degree(v));
      for (dynreach::VertexId w = 0; w < n; ++w) {
        std::size_t seen = 0;
        for (const auto& inc : g.out_edges(v)) seen += inc.other == w;
        CHECK(seen == model.multiplicity(v, w));
        CHECK(g.find_edge(v, w).has_value() == (seen > 0));
      }
    }
    CHECK(out_sum == g.edge_count());
    CHECK(in_sum == g.edge_count());
  }
}
