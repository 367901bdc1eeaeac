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

#include "dynreach/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_set>

#include "random_util.hpp"
#include "text_util.hpp"

namespace dynreach {

using detail::Rng;
using detail::uniform_below;
using detail::uniform_unit;

namespace {

EdgePair random_pair(Rng& rng, std::uint32_t n) {
  const auto u = static_cast<VertexId>(uniform_below(rng, n));
  const auto v = static_cast<VertexId>(uniform_below(rng, n));
  return {u, v};
}

}  // namespace

OperationSequence gen_er_instance(const ErSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("er: n must be at least 1");
  if (!(spec.density >= 0)) throw std::invalid_argument("er: d must be >= 0");
  if (spec.batch == 0) throw std::invalid_argument("er: batch must be >= 1");
  const double pi = spec.p_insert, pd = spec.p_delete, pq = spec.p_query;
  if (!(pi >= 0 && pd >= 0 && pq >= 0))
    throw std::invalid_argument("er: proportions must be non-negative");
  const double total = pi + pd + pq;
  if (spec.sigma > 0 && !(total > 0))
    throw std::invalid_argument("er: proportions must not all be zero");

  Rng rng = detail::derive_rng(spec.seed, 0);
  OperationSequence seq;
  seq.n = spec.n;
  seq.source = 0;

  const auto m = static_cast<std::size_t>(std::llround(spec.density * spec.n));
  std::vector<EdgePair> live;
  live.reserve(m);
  for (std::size_t i = 0; i < m; ++i) live.push_back(random_pair(rng, spec.n));
  seq.initial_edges = live;

  seq.ops.reserve(spec.sigma);
  while (seq.ops.size() < spec.sigma) {
    const double r = uniform_unit(rng) * total;
    const OpKind kind = r < pi        ? OpKind::kAddEdge
                        : r < pi + pd ? OpKind::kRemoveEdge
                                      : OpKind::kQuery;
    if (kind == OpKind::kRemoveEdge && live.empty()) {
      if (pi == 0 && pq == 0)
        throw std::invalid_argument("er: deletions exhausted every edge");
      continue;
    }
    const std::size_t len =
        std::min<std::size_t>(spec.batch, spec.sigma - seq.ops.size());
    for (std::size_t i = 0; i < len; ++i) {
      switch (kind) {
        case OpKind::kAddEdge: {
          const EdgePair e = random_pair(rng, spec.n);
          live.push_back(e);
          seq.ops.push_back(Operation::add(e.tail, e.head));
          break;
        }
        case OpKind::kRemoveEdge: {
          const std::size_t j = uniform_below(rng, live.size());
          const EdgePair e = live[j];
          live[j] = live.back();
          live.pop_back();
          seq.ops.push_back(Operation::remove(e.tail, e.head));
          break;
        }
        case OpKind::kQuery:
          seq.ops.push_back(
              Operation::query(static_cast<VertexId>(uniform_below(rng, spec.n))));
          break;
      }
      if (kind == OpKind::kRemoveEdge && live.empty()) break;
    }
  }
  return seq;
}

std::vector<EdgePair> gen_kronecker_snapshot(const Initiator& initiator,
                                             std::uint32_t k,
                                             std::uint64_t seed) {
  if (k < 1 || k > 30) throw std::invalid_argument("kronecker: k must be in [1, 30]");
  double sum = 0;
  int nonzero = 0;
  for (const double p : initiator) {
    if (!(p >= 0 && p <= 1))
      throw std::invalid_argument("kronecker: initiator entries must lie in [0, 1]");
    sum += p;
    nonzero += p > 0;
  }
  if (nonzero == 0) return {};

  std::uint64_t cells = 1;
  for (std::uint32_t i = 0; i < k; ++i) cells *= static_cast<std::uint64_t>(nonzero);
  const double expected = std::pow(sum, static_cast<double>(k));
  const auto target = static_cast<std::uint64_t>(
      std::min(static_cast<double>(cells), std::round(expected)));

  const double cum0 = initiator[0] / sum;
  const double cum1 = cum0 + initiator[1] / sum;
  const double cum2 = cum1 + initiator[2] / sum;

  Rng rng = detail::derive_rng(seed, 0);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(target));
  std::vector<EdgePair> edges;
  edges.reserve(static_cast<std::size_t>(target));
  // Generous guard so degenerate initiators cannot loop forever.
  const std::uint64_t max_draws = 100 * target + 10000;
  for (std::uint64_t draw = 0; edges.size() < target && draw < max_draws; ++draw) {
    std::uint32_t row = 0, col = 0;
    for (std::uint32_t level = 0; level < k; ++level) {
      double r = uniform_unit(rng);
      int cell;
      if (r < cum0) {
        cell = 0;
      } else if (r < cum1) {
        cell = 1;
      } else if (r < cum2) {
        cell = 2;
      } else {
        cell = 3;
      }
      // Rounding may land on a zero cell at the very top of the range.
      while (initiator[cell] == 0) cell = (cell + 3) % 4;
      row = (row << 1) | static_cast<std::uint32_t>(cell >> 1);
      col = (col << 1) | static_cast<std::uint32_t>(cell & 1);
    }
    const std::uint64_t key = (static_cast<std::uint64_t>(row) << 32) | col;
    if (seen.insert(key).second) edges.push_back({row, col});
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

OperationSequence gen_kronecker_instance(const KroneckerSpec& spec) {
  if (spec.schedule.size() < 2)
    throw std::invalid_argument("kronecker: need at least two snapshots");
  const std::uint32_t kmax =
      *std::max_element(spec.schedule.begin(), spec.schedule.end());
  if (kmax > 30) throw std::invalid_argument("kronecker: k must be in [1, 30]");
  Rng seeds = detail::derive_rng(spec.seed, 1);
  std::vector<std::vector<EdgePair>> snapshots;
  for (const std::uint32_t k : spec.schedule)
    snapshots.push_back(gen_kronecker_snapshot(spec.initiator, k, seeds()));
  return snapshots_to_sequence(std::uint32_t{1} << kmax, snapshots, seeds(),
                               spec.source_rank);
}

std::vector<VertexId> vertices_by_out_degree(std::uint32_t n,
                                             const std::vector<EdgePair>& edges) {
  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : edges) ++degree[e.tail];
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return degree[a] > degree[b];
  });
  return order;
}

OperationSequence snapshots_to_sequence(
    std::uint32_t n, const std::vector<std::vector<EdgePair>>& snapshots,
    std::uint64_t seed, std::uint32_t source_rank) {
  if (n == 0) throw std::invalid_argument("snapshots: empty vertex universe");
  if (snapshots.empty()) throw std::invalid_argument("snapshots: none given");
  if (source_rank >= n)
    throw std::invalid_argument("snapshots: source rank out of range");

  std::vector<std::vector<EdgePair>> sets;
  sets.reserve(snapshots.size());
  for (const auto& s : snapshots) {
    auto set = s;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (const auto& e : set)
      if (e.tail >= n || e.head >= n)
        throw std::invalid_argument("snapshots: vertex out of range");
    sets.push_back(std::move(set));
  }

  OperationSequence seq;
  seq.n = n;
  seq.initial_edges = sets.front();
  seq.source = vertices_by_out_degree(n, sets.front())[source_rank];
  seq.lenient = true;

  for (std::size_t i = 1; i < sets.size(); ++i) {
    const auto& prev = sets[i - 1];
    const auto& next = sets[i];
    std::vector<Operation> diff;
    std::vector<EdgePair> part;
    std::set_difference(next.begin(), next.end(), prev.begin(), prev.end(),
                        std::back_inserter(part));
    for (const auto& e : part) diff.push_back(Operation::add(e.tail, e.head));
    part.clear();
    std::set_difference(prev.begin(), prev.end(), next.begin(), next.end(),
                        std::back_inserter(part));
    for (const auto& e : part) diff.push_back(Operation::remove(e.tail, e.head));
    Rng rng = detail::derive_rng(seed, i);
    detail::shuffle(diff, rng);
    seq.ops.insert(seq.ops.end(), diff.begin(), diff.end());
  }
  return seq;
}

OperationSequence shuffle_sequence(const OperationSequence& seq,
                                   std::uint64_t seed) {
  OperationSequence out = seq;
  std::vector<std::size_t> slots;
  std::vector<Operation> updates;
  for (std::size_t i = 0; i < seq.ops.size(); ++i) {
    if (!seq.ops[i].is_update()) continue;
    slots.push_back(i);
    updates.push_back(seq.ops[i]);
  }
  Rng rng = detail::derive_rng(seed, 0);
  detail::shuffle(updates, rng);
  for (std::size_t j = 0; j < slots.size(); ++j) out.ops[slots[j]] = updates[j];

  std::map<EdgePair, std::size_t> live;
  for (const auto& e : out.initial_edges) ++live[e];
  for (const auto& op : out.ops) {
    if (op.kind == OpKind::kAddEdge) {
      ++live[{op.u, op.v}];
    } else if (op.kind == OpKind::kRemoveEdge) {
      auto it = live.find({op.u, op.v});
      if (it == live.end() || it->second == 0) {
        out.lenient = true;
        continue;
      }
      --it->second;
    }
  }
  return out;
}

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  std::optional<T> v;
  if constexpr (std::is_floating_point_v<T>) {
    v = detail::parse_double(value);
  } else {
    v = detail::parse_int<T>(value);
  }
  if (!v)
    throw std::invalid_argument("bad value for '" + std::string(key) + "': '" +
                                std::string(value) + "'");
  return *v;
}

Initiator parse_initiator(std::string_view value) {
  Initiator m{};
  std::size_t i = 0;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos <= value.size(); ++pos) {
    if (pos < value.size() && value[pos] != ',') continue;
    if (i == 4) throw std::invalid_argument("init: expected four entries");
    m[i++] = parse_number<double>("init", value.substr(start, pos - start));
    start = pos + 1;
  }
  if (i != 4) throw std::invalid_argument("init: expected four entries");
  return m;
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  detail::for_each_line(text, [&](std::size_t, std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    for (const auto tok : detail::split_ws(line)) {
      const auto eq = tok.find('=');
      if (eq == std::string_view::npos || eq == 0)
        throw std::invalid_argument("expected key=value, got '" +
                                    std::string(tok) + "'");
      std::string key(tok.substr(0, eq));
      if (kv.count(key)) throw std::invalid_argument("duplicate key '" + key + "'");
      kv.emplace(std::move(key), std::string(tok.substr(eq + 1)));
    }
  });

  auto take = [&](std::string_view key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto require = [&](std::string_view key) {
    auto v = take(key);
    if (!v) throw std::invalid_argument("missing key '" + std::string(key) + "'");
    return *v;
  };
  auto finish = [&] {
    if (!kv.empty())
      throw std::invalid_argument("unknown key '" + kv.begin()->first + "'");
  };

  const std::string kind = require("kind");
  if (kind == "er") {
    ErSpec s;
    s.n = parse_number<std::uint32_t>("n", require("n"));
    s.density = parse_number<double>("d", require("d"));
    s.sigma = parse_number<std::size_t>("sigma", require("sigma"));
    if (auto v = take("pi")) s.p_insert = parse_number<double>("pi", *v);
    if (auto v = take("pd")) s.p_delete = parse_number<double>("pd", *v);
    if (auto v = take("pq")) s.p_query = parse_number<double>("pq", *v);
    if (auto v = take("batch")) s.batch = parse_number<std::uint32_t>("batch", *v);
    if (auto v = take("seed")) s.seed = parse_number<std::uint64_t>("seed", *v);
    finish();
    return s;
  }
  if (kind == "kronecker") {
    KroneckerSpec s;
    if (auto v = take("init")) s.initiator = parse_initiator(*v);
    if (auto v = take("seed")) s.seed = parse_number<std::uint64_t>("seed", *v);
    if (auto v = take("source_rank"))
      s.source_rank = parse_number<std::uint32_t>("source_rank", *v);
    auto k = take("k");
    auto kmin = take("kmin");
    auto kmax = take("kmax");
    auto count = take("snapshots");
    if (k) {
      if (kmin || kmax) throw std::invalid_argument("give either k or kmin/kmax");
      if (!count) throw std::invalid_argument("missing key 'snapshots'");
      s.schedule.assign(parse_number<std::size_t>("snapshots", *count),
                        parse_number<std::uint32_t>("k", *k));
    } else {
      if (!kmin || !kmax) throw std::invalid_argument("missing key 'k'");
      if (count) throw std::invalid_argument("snapshots is implied by kmin/kmax");
      const auto lo = parse_number<std::uint32_t>("kmin", *kmin);
      const auto hi = parse_number<std::uint32_t>("kmax", *kmax);
      if (lo > hi) throw std::invalid_argument("kmin exceeds kmax");
      for (std::uint32_t i = lo; i <= hi; ++i) s.schedule.push_back(i);
    }
    finish();
    return s;
  }
  throw std::invalid_argument("unknown kind '" + kind + "' (expected er or kronecker)");
}

OperationSequence generate(const GeneratorSpec& spec) {
  return std::visit(
      [](const auto& s) -> OperationSequence {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, ErSpec>) {
          return gen_er_instance(s);
        } else {
          return gen_kronecker_instance(s);
        }
      },
      spec);
}

}  // namespace dynreach
