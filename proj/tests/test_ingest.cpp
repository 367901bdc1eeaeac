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

#include <set>
#include <tuple>

#include "doctest.h"
#include "dynreach/ingest.hpp"
#include "dynreach/registry.hpp"
#include "dynreach/replay.hpp"

using namespace dynreach;

namespace {

const std::string kData = DYNREACH_TEST_DATA;

}  // namespace

TEST_CASE("temporal lines") {
  const auto one = parse_temporal_stream("1 2 +1 100\n");
  REQUIRE(one.size() == 1);
  CHECK(one[0].tail == "1");
  CHECK(one[0].head == "2");
  CHECK(one[0].sign == 1);
  CHECK(one[0].timestamp == 100);

  CHECK(parse_temporal_stream("% header\n# more\n\n").empty());
  const auto signs = parse_temporal_stream("a b -1 5\na b 3 6\r\n");
  CHECK(signs[0].sign == -1);
  CHECK(signs[1].sign == 1);

  try {
    parse_temporal_stream("% c\n1 2 +1 100\n1 2 x 5\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_temporal_stream("1 2 +1\n"), ParseError);
  CHECK_THROWS_AS(parse_temporal_stream("1 2 0 4\n"), ParseError);
  CHECK_THROWS_AS(parse_temporal_stream("1 2 1 later\n"), ParseError);
}

TEST_CASE("events become an initial graph plus updates") {
  const auto r = events_to_sequence(parse_temporal_stream(
      "a b 1 1\n"
      "b c 1 1\n"
      "c a 1 2\n"
      "a b -1 3\n"));
  const auto& seq = r.sequence;
  CHECK(seq.n == 3);
  CHECK(seq.source == 0);
  CHECK(r.relabeling.label(seq.source) == "a");
  CHECK(seq.initial_edges == std::vector<EdgePair>{{0, 1}, {1, 2}});
  CHECK(seq.ops == std::vector<Operation>{Operation::add(2, 0), Operation::remove(0, 1)});
  CHECK(seq.lenient);
}

TEST_CASE("deleting an edge that was never inserted is skipped") {
  const auto r = events_to_sequence(parse_temporal_stream("a b 1 1\nc d -1 2\n"));
  const auto result = replay(r.sequence, make_algorithm_factory("sbfs"));
  REQUIRE(result.records.size() == 1);
  CHECK(result.records[0].skipped);
  CHECK(result.records[0].live_edges == 1);
}

TEST_CASE("parallel insertions then one deletion keeps one copy") {
  const auto r = events_to_sequence(parse_temporal_stream(
      "s x 1 1\nx y 1 2\nx y 1 3\nx y -1 4\n"));
  DynamicInstance inst(r.sequence.n, r.sequence.source, make_algorithm_factory("sbfs"));
  inst.load(r.sequence.initial_edges);
  inst.initialize();
  std::vector<EdgeId> ids;
  for (const auto& op : r.sequence.ops) {
    if (op.kind == OpKind::kAddEdge) ids.push_back(inst.insert(op.u, op.v));
    if (op.kind == OpKind::kRemoveEdge) REQUIRE(inst.remove(op.u, op.v));
  }
  REQUIRE(ids.size() == 2);
  CHECK(inst.graph().is_live(ids[0]));
  CHECK_FALSE(inst.graph().is_live(ids[1]));
  CHECK(inst.query(2));
}

TEST_CASE("equal timestamps keep file order") {
  const auto r = events_to_sequence(parse_temporal_stream(
      "s a 1 0\n"
      "a b 1 5\n"
      "a b -1 5\n"
      "a c 1 4\n"));
  CHECK(r.sequence.ops == std::vector<Operation>{Operation::add(1, 3), Operation::add(1, 2),
                                                 Operation::remove(1, 2)});
}

TEST_CASE("first timestamp group needs an insertion") {
  CHECK_THROWS_AS(events_to_sequence(parse_temporal_stream("a b -1 1\na b 1 2\n")),
                  std::invalid_argument);
  CHECK_THROWS_AS(events_to_sequence({}), std::invalid_argument);
  // A deletion inside the first group cancels a matching initial edge.
  const auto r = events_to_sequence(parse_temporal_stream("a b 1 1\na c 1 1\na b -1 1\n"));
  CHECK(r.sequence.initial_edges == std::vector<EdgePair>{{0, 2}});
}

TEST_CASE("relabeling round trip") {
  VertexRelabeling rl;
  const std::vector<std::string> labels = {"x17", "0", "AS3356", "x17", "-4"};
  std::vector<VertexId> ids;
  for (const auto& l : labels) ids.push_back(rl.id(l));
  CHECK(ids == std::vector<VertexId>{0, 1, 2, 0, 3});
  CHECK(rl.size() == 4);
  for (std::size_t i = 0; i < labels.size(); ++i) CHECK(rl.label(ids[i]) == labels[i]);
}

TEST_CASE("golden temporal file") {
  const auto text = read_text_file(kData + "/temporal_toy.txt");
  const auto r = events_to_sequence(parse_temporal_stream(text));
  const auto expected = load_sequence(kData + "/temporal_toy.expected");
  CHECK(r.sequence == expected);
  CHECK(r.relabeling.labels() == std::vector<std::string>{"alice", "bob", "carol", "dave"});
}

TEST_CASE("relationship snapshots") {
  VertexRelabeling rl;
  const auto peer = parse_snapshot("10|20|0\n", rl);
  CHECK(peer == std::vector<EdgePair>{{0, 1}, {1, 0}});
  const auto pc = parse_snapshot("10 30 -1\n", rl);
  CHECK(pc == std::vector<EdgePair>{{0, 2}});
  const auto cp = parse_snapshot("10 30 1\n", rl);
  CHECK(cp == std::vector<EdgePair>{{2, 0}});
  const auto sibling = parse_snapshot("20 30 2\n", rl);
  CHECK(sibling == std::vector<EdgePair>{{1, 2}, {2, 1}});
  const auto plain = parse_snapshot("10 30\n10 30\n", rl);
  CHECK(plain == std::vector<EdgePair>{{0, 2}});
  CHECK_THROWS_AS(parse_snapshot("# nothing\n", rl), std::invalid_argument);
  CHECK_THROWS_AS(parse_snapshot("1|2|7\n", rl), ParseError);
  CHECK_THROWS_AS(parse_snapshot("1\n", rl), ParseError);
}

TEST_CASE("three toy snapshots") {
  std::vector<std::filesystem::path> files;
  for (int i = 1; i <= 3; ++i) files.push_back(kData + "/asrel_" + std::to_string(i) + ".txt");
  const auto r = snapshots_from_files(files, 3, 0);
  const auto& seq = r.sequence;
  CHECK(seq.n == 4);
  CHECK(seq.initial_edges == std::vector<EdgePair>{{0, 1}, {0, 2}, {1, 2}, {2, 1}});
  CHECK(seq.source == 0);
  REQUIRE(seq.ops.size() == 5);
  using Keyed = std::set<std::tuple<bool, VertexId, VertexId>>;
  auto keyed = [&](std::size_t from, std::size_t to) {
    Keyed out;
    for (std::size_t i = from; i < to; ++i)
      out.insert({seq.ops[i].kind == OpKind::kAddEdge, seq.ops[i].u, seq.ops[i].v});
    return out;
  };
  CHECK(keyed(0, 2) == Keyed{{false, 0, 2}, {true, 2, 3}});
  CHECK(keyed(2, 5) == Keyed{{false, 1, 2}, {false, 2, 1}, {true, 0, 3}});
  CHECK(snapshots_from_files(files, 3, 1).sequence.source == 1);
  CHECK(snapshots_from_files(files, 3, 0).sequence == seq);
  for (const auto& alg : canonical_configurations())
    CHECK(verify_against_oracle(seq, make_algorithm_factory(alg)).passed);

  CHECK_THROWS_AS(snapshots_from_texts({"1 2\n", "# empty\n"}, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(snapshots_from_files({kData + "/missing.txt"}, 0, 0), IoError);
}
