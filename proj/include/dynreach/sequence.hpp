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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dynreach/graph.hpp"

namespace dynreach {

enum class OpKind : std::uint8_t { kAddEdge, kRemoveEdge, kQuery };

struct Operation {
  OpKind kind;
  VertexId u;  // tail, or the queried vertex
  VertexId v;  // head; unused for queries

  static Operation add(VertexId u, VertexId v) { return {OpKind::kAddEdge, u, v}; }
  static Operation remove(VertexId u, VertexId v) {
    return {OpKind::kRemoveEdge, u, v};
  }
  static Operation query(VertexId t) { return {OpKind::kQuery, t, 0}; }

  bool is_update() const { return kind != OpKind::kQuery; }
  friend bool operator==(const Operation&, const Operation&) = default;
};

struct EdgePair {
  VertexId tail;
  VertexId head;
  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

/// An instance: vertex count, source, initial graph and the update/query
/// stream replayed against it.
struct OperationSequence {
  std::uint32_t n = 0;
  VertexId source = 0;
  std::vector<EdgePair> initial_edges;
  std::vector<Operation> ops;
  // Removals without a live (u, v) match are skipped instead of rejected.
  bool lenient = false;

  friend bool operator==(const OperationSequence&,
                         const OperationSequence&) = default;
};

struct SequenceSummary {
  std::size_t initial_edges = 0;
  std::size_t insertions = 0;
  std::size_t deletions = 0;
  std::size_t queries = 0;
  double initial_density = 0.0;
};

SequenceSummary summarize(const OperationSequence& seq);

/// Thrown for malformed input text; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Text format, one record per line, '#' starts a comment:
///   n <n> source <s> [lenient=1]
///   i <u> <v>            initial edge
///   a <u> <v> | d <u> <v> | q <t>
/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OperationSequence parse_sequence(std::string_view text);
std::string format_sequence(const OperationSequence& seq);

OperationSequence load_sequence(const std::filesystem::path& path);
void save_sequence(const OperationSequence& seq,
                   const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace dynreach
