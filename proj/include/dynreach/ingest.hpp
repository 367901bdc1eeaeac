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
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dynreach/sequence.hpp"

namespace dynreach {

struct TemporalEdgeEvent {
  std::string tail;
  std::string head;
  int sign = 1;  // +1 insertion, -1 deletion
  std::int64_t timestamp = 0;

  friend bool operator==(const TemporalEdgeEvent&,
                         const TemporalEdgeEvent&) = default;
};

/// Dense ids for external labels, assigned in order of first appearance.
class VertexRelabeling {
 public:
  VertexId id(const std::string& label);
  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(labels_.size()); }

 private:
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::string> labels_;
};

/// Lines of `<tail> <head> <sign> <timestamp>`; lines starting with '%' or
/// '#' are comments. Any positive sign is an insertion, any negative one a
/// deletion. Throws ParseError with the line number.
std::vector<TemporalEdgeEvent> parse_temporal_stream(std::string_view text);

struct IngestResult {
  OperationSequence sequence;
  VertexRelabeling relabeling;
};

/// Events are stably sorted by timestamp. The earliest timestamp group forms
/// the initial graph (deletions in it drop the youngest matching edge, or
/// nothing); the source is the tail of its first insertion. Every later
/// event becomes one update. The result is lenient.
/// Throws std::invalid_argument for an empty stream or a first group
/// without insertions.
IngestResult events_to_sequence(const std::vector<TemporalEdgeEvent>& events);

/// One relationship file per snapshot: `<a> <b> <rel>` lines ('|' also
/// separates fields). Edges point from provider to customer: rel -1 is
/// a -> b, rel 1 is b -> a, rel 0 (peers) and 2 (siblings) give both
/// directions; a line without rel is a -> b.
/// Throws ParseError for malformed lines and std::invalid_argument for a
/// snapshot without edges.
std::vector<EdgePair> parse_snapshot(std::string_view text,
                                     VertexRelabeling& relabeling);

/// Parses the files in order over one shared label space and turns them
/// into a sequence via snapshots_to_sequence.
IngestResult snapshots_from_texts(const std::vector<std::string>& texts,
                                  std::uint64_t seed,
                                  std::uint32_t source_rank = 0);
IngestResult snapshots_from_files(
    const std::vector<std::filesystem::path>& paths, std::uint64_t seed,
    std::uint32_t source_rank = 0);

}  // namespace dynreach
