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

#include <array>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "dynreach/sequence.hpp"

namespace dynreach {

/// Random G(n, m) graph followed by a mixed stream of batched operations.
struct ErSpec {
  std::uint32_t n = 1;
  double density = 0.0;  // initial m = round(density * n)
  std::size_t sigma = 0;
  double p_insert = 1.0 / 3;
  double p_delete = 1.0 / 3;
  double p_query = 1.0 / 3;
  std::uint32_t batch = 10;
  std::uint64_t seed = 0;
};

/// Sources are fixed at vertex 0. Each batch holds `batch` operations of one
/// kind; a deletion batch stops early once no live edge is left, and a batch
/// kind of deletion drawn with no live edges is redrawn.
OperationSequence gen_er_instance(const ErSpec& spec);

/// Row-major 2x2 initiator {a, b, c, d}.
using Initiator = std::array<double, 4>;

/// Published estimate for a real network; used when none is given.
inline constexpr Initiator kDefaultInitiator = {0.99, 0.54, 0.49, 0.13};

/// Directed edge set over 2^k vertices, sorted. Edges are placed one at a
/// time by descending k levels of the initiator; duplicates are discarded
/// until round((a+b+c+d)^k) distinct edges exist, or every cell with
/// non-zero probability is taken.
std::vector<EdgePair> gen_kronecker_snapshot(const Initiator& initiator,
                                             std::uint32_t k,
                                             std::uint64_t seed);

struct KroneckerSpec {
  Initiator initiator = kDefaultInitiator;
  // One Kronecker power per snapshot; a constant schedule repeats one k,
  // a growing one counts up. The vertex universe is 2^max(k).
  std::vector<std::uint32_t> schedule;
  std::uint64_t seed = 0;
  std::uint32_t source_rank = 0;
};

OperationSequence gen_kronecker_instance(const KroneckerSpec& spec);

/// Vertices ordered by out-degree in `edges` (descending, ties by id).
std::vector<VertexId> vertices_by_out_degree(std::uint32_t n,
                                             const std::vector<EdgePair>& edges);

/// The first snapshot becomes the initial graph; the differences between
/// consecutive snapshots follow as updates, each difference shuffled on its
/// own and kept in snapshot order. The source is the vertex of rank
/// `source_rank` in out-degree order of the first snapshot. Snapshots are
/// treated as sets.
OperationSequence snapshots_to_sequence(
    std::uint32_t n, const std::vector<std::vector<EdgePair>>& snapshots,
    std::uint64_t seed, std::uint32_t source_rank = 0);

/// Permutes the update operations among the update slots; queries stay in
/// place. The result is lenient if some removal no longer finds its edge.
OperationSequence shuffle_sequence(const OperationSequence& seq,
                                   std::uint64_t seed);

using GeneratorSpec = std::variant<ErSpec, KroneckerSpec>;

/// Flat key=value spec, whitespace separated, '#' comments:
///   kind=er n=<n> d=<density> sigma=<ops> pi=<p> pd=<p> pq=<p>
///           batch=<size> seed=<seed>
///   kind=kronecker init=<a,b,c,d> k=<k> snapshots=<count> seed=<seed>
///                  [source_rank=<r>]
///   kind=kronecker init=<a,b,c,d> kmin=<k> kmax=<k> seed=<seed> ...
/// Throws std::invalid_argument on unknown keys or bad values.
GeneratorSpec parse_generator_spec(std::string_view text);

OperationSequence generate(const GeneratorSpec& spec);

}  // namespace dynreach
