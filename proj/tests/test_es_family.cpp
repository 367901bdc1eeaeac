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

#include <memory>

#include "doctest.h"
#include "dynreach/es_family.hpp"
#include "dynreach/registry.hpp"
#include "dynreach/replay.hpp"
#include "test_util.hpp"

using namespace dynreach;

namespace {

std::unique_ptr<EsTreeBase> make(const char* family, const DiGraph& g,
                                 VertexId s, EsParams p = {}) {
  const std::string f = family;
  if (f == "es") return std::make_unique<EvenShiloach>(g, s, EsVariant::kClassic, p);
  if (f == "mes") return std::make_unique<EvenShiloach>(g, s, EsVariant::kMultiLevel, p);
  return std::make_unique<SimplifiedEvenShiloach>(g, s, p);
}

const char* kFamilies[] = {"es", "mes", "ses"};

void remove(DiGraph& g, EsTreeBase& alg, VertexId u, VertexId v) {
  const EdgeId e = *g.find_edge(u, v);
  g.remove_edge(e);
  alg.edge_deleted(u, v, e);
}

EdgeId insert(DiGraph& g, EsTreeBase& alg, VertexId u, VertexId v) {
  const EdgeId e = g.add_edge(u, v);
  alg.edge_inserted(u, v, e);
  return e;
}

std::vector<std::uint32_t> model_levels(const DiGraph& g, VertexId s) {
  testutil::ModelGraph model(static_cast<std::uint32_t>(g.vertex_count()));
  for (EdgeId e = 0; e < g.edge_id_bound(); ++e)
    if (g.is_live(e)) model.add(g.tail(e), g.head(e));
  auto d = model.distances(s);
  for (auto& x : d)
    if (x == testutil::kInf) x = kInfiniteLevel;
  return d;
}

DiGraph diamond() {
  DiGraph g(5);  // s=0, a=1, b=2, c=3, isolated 4
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  return g;
}

}  // namespace

TEST_CASE("initialize yields BFS levels") {
  for (const char* fam : kFamilies) {
    CAPTURE(fam);
    DiGraph g = diamond();
    auto alg = make(fam, g, 0);
    alg->initialize();
    CHECK(alg->level(0) == 0);
    CHECK(alg->level(1) == 1);
    CHECK(alg->level(2) == 1);
    CHECK(alg->level(3) == 2);
    CHECK(alg->level(4) == kInfiniteLevel);
    CHECK(alg->query(0));
    CHECK_FALSE(alg->query(4));
    CHECK(alg->check_invariants());

    std::mt19937_64 rng(5);
    DiGraph r(32);
    for (int i = 0; i < 64; ++i)
      r.add_edge(static_cast<VertexId>(rng() % 32), static_cast<VertexId>(rng() % 32));
    auto ra = make(fam, r, 0);
    ra->initialize();
    CHECK(ra->levels() == model_levels(r, 0));
  }
}

TEST_CASE("classic ES starts at the first in-list entry") {
  DiGraph g = diamond();
  EvenShiloach alg(g, 0, EsVariant::kClassic);
  alg.initialize();
  CHECK(alg.check_minimal_tree_index());
  CHECK(g.tail(alg.tree_edge(3)) == 1);  // (a, c) is met first
}

TEST_CASE("insertions") {
  for (const char* fam : kFamilies) {
    CAPTURE(fam);
    DiGraph g = diamond();
    auto alg = make(fam, g, 0);
    alg->initialize();
    const EdgeId sc = insert(g, *alg, 0, 3);
    CHECK(alg->level(3) == 1);
    CHECK(alg->tree_edge(3) == sc);

    // Between unreachable vertices: nothing changes.
    DiGraph h(4);
    h.add_edge(0, 1);
    auto b = make(fam, h, 0);
    b->initialize();
    const auto levels = b->levels();
    insert(h, *b, 2, 3);
    CHECK(b->levels() == levels);
  }
  // Same level, later index: the tree edge stays.
  DiGraph g = diamond();
  EvenShiloach es(g, 0, EsVariant::kClassic);
  es.initialize();
  const EdgeId before = es.tree_edge(3);
  insert(g, es, 2, 3);
  CHECK(es.tree_edge(3) == before);
  CHECK(es.check_minimal_tree_index());
}

TEST_CASE("deleting c's tree edge in the diamond keeps level 2") {
  for (const char* fam : kFamilies) {
    CAPTURE(fam);
    DiGraph g = diamond();
    auto alg = make(fam, g, 0);
    alg->initialize();
    REQUIRE(g.tail(alg->tree_edge(3)) == 1);
    remove(g, *alg, 1, 3);
    CHECK(alg->level(3) == 2);
    CHECK(g.tail(alg->tree_edge(3)) == 2);
    CHECK(alg->check_invariants());
  }
}

TEST_CASE("path plus shortcut: losing the shortcut moves b down a level") {
  for (const char* fam : kFamilies) {
    CAPTURE(fam);
    DiGraph g(3);  // s=0, a=1, b=2
    g.add_edge(0, 2);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    auto alg = make(fam, g, 0);
    alg->initialize();
    REQUIRE(alg->level(2) == 1);
    const Counters before = alg->counters();
    remove(g, *alg, 0, 2);
    CHECK(alg->level(2) == 2);
    CHECK(g.tail(alg->tree_edge(2)) == 1);
    if (std::string(fam) != "es") CHECK(alg->counters().queue_pops - before.queue_pops == 1);
    CHECK(alg->check_invariants());
  }
}

TEST_CASE("MES skips several levels at once") {
  // s -> p1 -> p2 -> p3 -> q; q -> v. Also s -> x -> v, so v sits at level 2.
  DiGraph g(7);  // s=0, x=1, v=2, p1=3, p2=4, p3=5, q=6
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 6);
  g.add_edge(6, 2);
  EvenShiloach alg(g, 0, EsVariant::kMultiLevel);
  alg.initialize();
  REQUIRE(alg.level(2) == 2);
  REQUIRE(alg.level(6) == 4);
  const Counters before = alg.counters();
  remove(g, alg, 1, 2);
  CHECK(alg.level(2) == 5);
  CHECK(alg.counters().queue_pops - before.queue_pops == 1);
}

TEST_CASE("deleting a non-tree edge is O(1)") {
  for (const char* fam : kFamilies) {
    CAPTURE(fam);
    DiGraph g = diamond();
    g.add_edge(0, 3);
    auto alg = make(fam, g, 0);
    alg->initialize();
    const EdgeId tree = alg->tree_edge(3);
    const VertexId other_tail = g.tail(tree) == 0 ? 2 : 0;
    const Counters before = alg->counters();
    remove(g, *alg, other_tail, 3);
    CHECK(alg->counters() == before);
    CHECK(alg->tree_edge(3) == tree);
  }
}

TEST_CASE("cutting a chain makes it unreachable") {
  for (const char* fam : kFamilies) {
    CAPTURE(fam);
    const VertexId k = 12;
    DiGraph g(k + 1);
    for (VertexId v = 0; v < k; ++v) g.add_edge(v, v + 1);
    auto alg = make(fam, g, 0);
    alg->initialize();
    const Counters before = alg->counters();
    remove(g, *alg, 0, 1);
    for (VertexId v = 1; v <= k; ++v) CHECK(alg->level(v) == kInfiniteLevel);
    CHECK(alg->counters().queue_pops - before.queue_pops <= std::uint64_t{k} * (k + 1));
    CHECK(alg->counters().recomputations == 0);
    CHECK(alg->check_invariants());

    // SES: dropping the last in-edge takes the subtree along.
    DiGraph t(4);
    t.add_edge(0, 1);
    t.add_edge(1, 2);
    t.add_edge(2, 3);
    auto s = make(fam, t, 0);
    s->initialize();
    remove(t, *s, 1, 2);
    CHECK(s->query(1));
    CHECK_FALSE(s->query(2));
    CHECK_FALSE(s->query(3));
  }
}

TEST_CASE("a self-loop never becomes a tree edge") {
  for (const char* fam : kFamilies) {
    CAPTURE(fam);
    DiGraph g(4);  // s=0 -> 1 -> 2, 2 has a self-loop, 3 -> 2 from nowhere
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 2);
    g.add_edge(3, 2);
    auto alg = make(fam, g, 0);
    alg->initialize();
    remove(g, *alg, 1, 2);
    CHECK(alg->levels() == model_levels(g, 0));
    CHECK_FALSE(alg->query(2));
    CHECK(alg->check_invariants());
  }
}

TEST_CASE("beta aborts a long cascade") {
  // Chain s -> c1 -> ... -> ck with a detour s -> d1 -> ... -> dk -> c1 of
  // length k + 1. Cutting (s, c1) pushes every chain vertex down by k levels.
  const VertexId k = 10;
  for (const char* fam : kFamilies) {
    CAPTURE(fam);
    DiGraph g(2 * k + 1);
    g.add_edge(0, 1);
    for (VertexId i = 1; i < k; ++i) g.add_edge(i, i + 1);
    g.add_edge(0, k + 1);
    for (VertexId i = k + 1; i < 2 * k; ++i) g.add_edge(i, i + 1);
    g.add_edge(2 * k, 1);
    EsParams p;
    p.beta = 5;
    auto alg = make(fam, g, 0, p);
    alg->initialize();
    remove(g, *alg, 0, 1);
    if (std::string(fam) == "es") CHECK(alg->counters().recomputations == 1);
    CHECK(alg->last_max_insertions() <= 5);
    CHECK(alg->levels() == model_levels(g, 0));
    CHECK(alg->check_invariants());
  }
}

TEST_CASE("ratio bounds the queue pops of a deletion") {
  const VertexId k = 20;
  for (const char* fam : kFamilies) {
    CAPTURE(fam);
    DiGraph g(k + 1);
    for (VertexId v = 0; v < k; ++v) g.add_edge(v, v + 1);
    EsParams p;
    p.ratio = 0.25;
    auto alg = make(fam, g, 0, p);
    alg->initialize();
    remove(g, *alg, 0, 1);
    CHECK(alg->last_queue_pops() <= 0.25 * (k + 1) + 1);
    CHECK(alg->counters().recomputations == 1);
    for (VertexId v = 1; v <= k; ++v) CHECK_FALSE(alg->query(v));
  }
}

TEST_CASE("property: levels are exact after every update") {
  const EsParams settings[] = {{5, 0.5}, {100, 1.0}, {}};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    testutil::SequenceShape shape;
    shape.n = 64;
    shape.initial_edges = 100;
    shape.sigma = 300;
    shape.p_insert = 0.45;
    shape.p_delete = 0.45;
    shape.source_bias = 0.1;
    const auto seq = testutil::random_sequence(shape, seed);
    for (const auto& p : settings) {
      DiGraph g(seq.n);
      testutil::ModelGraph model(seq.n);
      for (const auto& e : seq.initial_edges) {
        g.add_edge(e.tail, e.head);
        model.add(e.tail, e.head);
      }
      EvenShiloach es(g, seq.source, EsVariant::kClassic, p);
      EvenShiloach mes(g, seq.source, EsVariant::kMultiLevel, p);
      SimplifiedEvenShiloach ses(g, seq.source, p);
      EsTreeBase* algs[] = {&es, &mes, &ses};
      for (auto* a : algs) a->initialize();
      REQUIRE(es.check_minimal_tree_index());

      for (const auto& op : seq.ops) {
        if (op.kind == OpKind::kQuery) continue;
        const std::size_t m_before = g.edge_count();
        std::vector<std::vector<std::uint32_t>> old_levels;
        for (auto* a : algs) old_levels.push_back(a->levels());
        std::vector<Counters> before;
        for (auto* a : algs) before.push_back(a->counters());
        if (op.kind == OpKind::kAddEdge) {
          const EdgeId e = g.add_edge(op.u, op.v);
          for (auto* a : algs) a->edge_inserted(op.u, op.v, e);
          model.add(op.u, op.v);
        } else {
          const EdgeId e = *g.find_edge(op.u, op.v);
          g.remove_edge(e);
          for (auto* a : algs) a->edge_deleted(op.u, op.v, e);
          model.remove(op.u, op.v);
        }
        auto expected = model.distances(seq.source);
        for (auto& x : expected)
          if (x == testutil::kInf) x = kInfiniteLevel;
        for (std::size_t i = 0; i < 3; ++i) {
          CAPTURE(seed);
          CAPTURE(algs[i]->name());
          REQUIRE(algs[i]->levels() == expected);
          REQUIRE(algs[i]->check_invariants());
          if (op.kind != OpKind::kRemoveEdge) continue;
          const Counters work = algs[i]->counters() - before[i];
          REQUIRE(work.recomputations <= 1);
          REQUIRE(algs[i]->last_max_insertions() <= p.beta);
          if (p.ratio < 1e9)
            REQUIRE(static_cast<double>(algs[i]->last_queue_pops()) <=
                    p.ratio * seq.n + 1);
          if (work.recomputations == 0) {
            // No level drops during a deletion.
            for (VertexId v = 0; v < seq.n; ++v)
              REQUIRE(algs[i]->level(v) >= old_levels[i][v]);
          }
          if (p.beta == 5)
            REQUIRE(work.edges_scanned <= 5 * m_before + m_before + seq.n);
        }
        REQUIRE(es.check_minimal_tree_index());
      }
    }
  }
}

TEST_CASE("registry builds the named variant") {
  DiGraph g(2);
  CHECK(make_algorithm_factory("ses:5:.5")(g, 0)->name() == "ses:5:0.5");
  CHECK(make_algorithm_factory("es:inf:inf")(g, 0)->name() == "es:inf:inf");
  CHECK(make_algorithm_factory("mes:100:1")(g, 0)->name() == "mes:100:1");
}
