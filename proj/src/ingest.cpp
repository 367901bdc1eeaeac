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

#include "dynreach/ingest.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dynreach/instance_gen.hpp"
#include "text_util.hpp"

namespace dynreach {

VertexId VertexRelabeling::id(const std::string& label) {
  auto [it, inserted] = ids_.try_emplace(label, static_cast<VertexId>(labels_.size()));
  if (inserted) labels_.push_back(label);
  return it->second;
}

std::vector<TemporalEdgeEvent> parse_temporal_stream(std::string_view text) {
  std::vector<TemporalEdgeEvent> events;
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0].front() == '%' || tok[0].front() == '#') return;
    if (tok.size() != 4)
      throw ParseError(line_no, "expected '<tail> <head> <sign> <timestamp>'");
    const auto sign = detail::parse_int<std::int64_t>(tok[2]);
    if (!sign || *sign == 0)
      throw ParseError(line_no, "bad sign '" + std::string(tok[2]) + "'");
    const auto ts = detail::parse_int<std::int64_t>(tok[3]);
    if (!ts) throw ParseError(line_no, "bad timestamp '" + std::string(tok[3]) + "'");
    events.push_back({std::string(tok[0]), std::string(tok[1]), *sign > 0 ? 1 : -1, *ts});
  });
  return events;
}

IngestResult events_to_sequence(const std::vector<TemporalEdgeEvent>& events) {
  if (events.empty()) throw std::invalid_argument("ingest: no events");
  IngestResult result;
  auto& relabel = result.relabeling;
  std::vector<EdgePair> pairs;
  pairs.reserve(events.size());
  for (const auto& ev : events) {
    const VertexId u = relabel.id(ev.tail);
    const VertexId v = relabel.id(ev.head);
    pairs.push_back({u, v});
  }

  std::vector<std::size_t> order(events.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return events[a].timestamp < events[b].timestamp;
  });

  auto& seq = result.sequence;
  seq.n = relabel.size();
  seq.lenient = true;

  const std::int64_t first_ts = events[order.front()].timestamp;
  std::size_t i = 0;
  bool have_source = false;
  for (; i < order.size() && events[order[i]].timestamp == first_ts; ++i) {
    const std::size_t k = order[i];
    const EdgePair e = pairs[k];
    if (events[k].sign > 0) {
      if (!have_source) {
        seq.source = e.tail;
        have_source = true;
      }
      seq.initial_edges.push_back(e);
      continue;
    }
    auto& init = seq.initial_edges;
    for (auto it = init.rbegin(); it != init.rend(); ++it) {
      if (*it == e) {
        init.erase(std::next(it).base());
        break;
      }
    }
  }
  if (!have_source)
    throw std::invalid_argument(
        "ingest: the earliest timestamp group has no insertion to take the "
        "source from");

  for (; i < order.size(); ++i) {
    const std::size_t k = order[i];
    const EdgePair e = pairs[k];
    seq.ops.push_back(events[k].sign > 0 ? Operation::add(e.tail, e.head)
                                         : Operation::remove(e.tail, e.head));
  }
  return result;
}

std::vector<EdgePair> parse_snapshot(std::string_view text,
                                     VertexRelabeling& relabeling) {
  std::vector<EdgePair> edges;
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    std::string line(raw);
    std::replace(line.begin(), line.end(), '|', ' ');
    const auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0].front() == '%' || tok[0].front() == '#') return;
    if (tok.size() != 2 && tok.size() != 3)
      throw ParseError(line_no, "expected '<a> <b> [<relationship>]'");
    int rel = -1;
    if (tok.size() == 3) {
      const auto r = detail::parse_int<int>(tok[2]);
      if (!r || *r < -1 || *r > 2)
        throw ParseError(line_no, "bad relationship '" + std::string(tok[2]) + "'");
      rel = *r;
    }
    const VertexId a = relabeling.id(std::string(tok[0]));
    const VertexId b = relabeling.id(std::string(tok[1]));
    if (rel != 1) edges.push_back({a, b});
    if (rel != -1) edges.push_back({b, a});
  });
  if (edges.empty()) throw std::invalid_argument("ingest: snapshot without edges");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

IngestResult snapshots_from_texts(const std::vector<std::string>& texts,
                                  std::uint64_t seed,
                                  std::uint32_t source_rank) {
  if (texts.empty()) throw std::invalid_argument("ingest: no snapshot files");
  IngestResult result;
  std::vector<std::vector<EdgePair>> snapshots;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      snapshots.push_back(parse_snapshot(texts[i], result.relabeling));
    } catch (const ParseError& e) {
      throw std::invalid_argument("snapshot " + std::to_string(i + 1) + ": " +
                                  e.what());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("snapshot " + std::to_string(i + 1) + ": " +
                                  e.what());
    }
  }
  result.sequence = snapshots_to_sequence(result.relabeling.size(), snapshots,
                                          seed, source_rank);
  return result;
}

IngestResult snapshots_from_files(
    const std::vector<std::filesystem::path>& paths, std::uint64_t seed,
    std::uint32_t source_rank) {
  std::vector<std::string> texts;
  texts.reserve(paths.size());
  for (const auto& p : paths) texts.push_back(read_text_file(p));
  return snapshots_from_texts(texts, seed, source_rank);
}

}  // namespace dynreach
