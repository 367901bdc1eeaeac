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

#include "dynreach/replay.hpp"

namespace dynreach {

namespace {

using Clock = std::chrono::steady_clock;

}  // namespace

DynamicInstance::DynamicInstance(std::uint32_t n, VertexId source,
                                 const AlgorithmFactory& factory)
    : graph_(n) {
  if (source >= n) throw std::out_of_range("source out of range");
  algorithm_ = factory(graph_, source);
}

void DynamicInstance::load(const std::vector<EdgePair>& edges) {
  for (const auto& e : edges) graph_.add_edge(e.tail, e.head);
}

EdgeId DynamicInstance::insert(VertexId u, VertexId v) {
  const EdgeId e = graph_.add_edge(u, v);
  algorithm_->edge_inserted(u, v, e);
  return e;
}

bool DynamicInstance::remove(VertexId u, VertexId v) {
  const auto e = graph_.find_edge(u, v);
  if (!e) return false;
  graph_.remove_edge(*e);
  algorithm_->edge_deleted(u, v, *e);
  return true;
}

bool DynamicInstance::query(VertexId t) {
  if (t >= graph_.vertex_count()) throw std::out_of_range("query vertex");
  return algorithm_->query(t);
}

ReplayResult replay(const OperationSequence& seq,
                    const AlgorithmFactory& factory,
                    const ReplayOptions& options) {
  const bool lenient = options.lenient.value_or(seq.lenient);
  if (seq.source >= seq.n) throw std::out_of_range("source out of range");
  DiGraph g(seq.n);
  for (const auto& e : seq.initial_edges) g.add_edge(e.tail, e.head);
  const auto owned = factory(g, seq.source);
  ReachabilityAlgorithm& alg = *owned;

  ReplayResult result;
  result.records.reserve(seq.ops.size());

  const auto start = Clock::now();
  auto t0 = Clock::now();
  alg.initialize();
  result.init_time = Clock::now() - t0;
  result.init_work = alg.counters();

  for (std::size_t i = 0; i < seq.ops.size(); ++i) {
    if (options.timeout && Clock::now() - start > *options.timeout) {
      result.timed_out = true;
      break;
    }
    const Operation& op = seq.ops[i];
    MeasurementRecord rec;
    rec.op_index = i;
    rec.kind = op.kind;
    const Counters before = alg.counters();

    switch (op.kind) {
      case OpKind::kAddEdge: {
        const EdgeId e = g.add_edge(op.u, op.v);
        t0 = Clock::now();
        alg.edge_inserted(op.u, op.v, e);
        rec.wall_time = Clock::now() - t0;
        break;
      }
      case OpKind::kRemoveEdge: {
        const auto e = g.find_edge(op.u, op.v);
        if (!e) {
          if (!lenient)
            throw ReplayError(i, "no live edge (" + std::to_string(op.u) +
                                     ", " + std::to_string(op.v) + ")");
          rec.skipped = true;
          break;
        }
        g.remove_edge(*e);
        t0 = Clock::now();
        alg.edge_deleted(op.u, op.v, *e);
        rec.wall_time = Clock::now() - t0;
        break;
      }
      case OpKind::kQuery: {
        t0 = Clock::now();
        const bool answer = alg.query(op.u);
        rec.wall_time = Clock::now() - t0;
        result.answers.push_back(answer);
        break;
      }
    }
    rec.work = alg.counters() - before;
    rec.live_edges = g.edge_count();
    result.records.push_back(rec);
  }
  return result;
}

VerifyReport verify_against_oracle(const OperationSequence& seq,
                                   const AlgorithmFactory& factory,
                                   const ReplayOptions& options) {
  const bool lenient = options.lenient.value_or(seq.lenient);
  DynamicInstance inst(seq.n, seq.source, factory);
  inst.load(seq.initial_edges);
  inst.initialize();

  auto sweep = [&](std::ptrdiff_t op_index) -> std::optional<VerifyReport> {
    const auto truth = oracle_reachable_set(inst.graph(), seq.source);
    for (VertexId t = 0; t < seq.n; ++t) {
      if (inst.query(t) != truth[t]) return VerifyReport{false, op_index, t, truth[t]};
    }
    return std::nullopt;
  };

  if (auto bad = sweep(-1)) return *bad;
  for (std::size_t i = 0; i < seq.ops.size(); ++i) {
    const Operation& op = seq.ops[i];
    const auto idx = static_cast<std::ptrdiff_t>(i);
    switch (op.kind) {
      case OpKind::kAddEdge:
        inst.insert(op.u, op.v);
        break;
      case OpKind::kRemoveEdge:
        if (!inst.remove(op.u, op.v) && !lenient)
          throw ReplayError(i, "no live edge (" + std::to_string(op.u) + ", " +
                                   std::to_string(op.v) + ")");
        break;
      case OpKind::kQuery: {
        const bool truth = oracle_reachable(inst.graph(), seq.source, op.u);
        if (inst.query(op.u) != truth) return {false, idx, op.u, truth};
        continue;
      }
    }
    if (auto bad = sweep(idx)) return *bad;
  }
  return {};
}

}  // namespace dynreach
