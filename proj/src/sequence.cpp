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

#include "dynreach/sequence.hpp"

#include <fstream>
#include <sstream>

#include "text_util.hpp"

namespace dynreach {

using detail::parse_int;

SequenceSummary summarize(const OperationSequence& seq) {
  SequenceSummary s;
  s.initial_edges = seq.initial_edges.size();
  for (const auto& op : seq.ops) {
    switch (op.kind) {
      case OpKind::kAddEdge: ++s.insertions; break;
      case OpKind::kRemoveEdge: ++s.deletions; break;
      case OpKind::kQuery: ++s.queries; break;
    }
  }
  s.initial_density =
      seq.n == 0 ? 0.0 : static_cast<double>(s.initial_edges) / seq.n;
  return s;
}

OperationSequence parse_sequence(std::string_view text) {
  OperationSequence seq;
  bool have_header = false;

  auto vertex = [&](std::size_t line, std::string_view tok) {
    auto v = parse_int<std::uint32_t>(tok);
    if (!v) throw ParseError(line, "bad vertex '" + std::string(tok) + "'");
    if (*v >= seq.n)
      throw ParseError(line, "vertex " + std::to_string(*v) +
                                 " out of range (n=" + std::to_string(seq.n) +
                                 ")");
    return *v;
  };

  detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto tok = detail::split_ws(line);
    if (tok.empty()) return;

    if (!have_header) {
      if (tok[0] != "n" || tok.size() < 4 || tok[2] != "source")
        throw ParseError(line_no, "expected header 'n <n> source <s>'");
      auto n = parse_int<std::uint32_t>(tok[1]);
      auto s = parse_int<std::uint32_t>(tok[3]);
      if (!n || !s) throw ParseError(line_no, "bad header numbers");
      if (*n == 0 || *s >= *n)
        throw ParseError(line_no, "source must lie in [0, n)");
      seq.n = *n;
      seq.source = *s;
      for (std::size_t i = 4; i < tok.size(); ++i) {
        if (tok[i] == "lenient=1") {
          seq.lenient = true;
        } else if (tok[i] != "lenient=0") {
          throw ParseError(line_no,
                           "unknown header field '" + std::string(tok[i]) + "'");
        }
      }
      have_header = true;
      return;
    }

    const std::string_view kind = tok[0];
    if (kind == "q") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'q <t>'");
      seq.ops.push_back(Operation::query(vertex(line_no, tok[1])));
      return;
    }
    if (kind != "i" && kind != "a" && kind != "d")
      throw ParseError(line_no, "unknown record '" + std::string(kind) + "'");
    if (tok.size() != 3)
      throw ParseError(line_no, "expected '" + std::string(kind) + " <u> <v>'");
    const VertexId u = vertex(line_no, tok[1]);
    const VertexId v = vertex(line_no, tok[2]);
    if (kind == "i") {
      if (!seq.ops.empty())
        throw ParseError(line_no, "initial edge after first operation");
      seq.initial_edges.push_back({u, v});
    } else if (kind == "a") {
      seq.ops.push_back(Operation::add(u, v));
    } else {
      seq.ops.push_back(Operation::remove(u, v));
    }
  });

  if (!have_header) throw ParseError(1, "missing header");
  return seq;
}

std::string format_sequence(const OperationSequence& seq) {
  const auto s = summarize(seq);
  std::ostringstream out;
  out << "n " << seq.n << " source " << seq.source;
  if (seq.lenient) out << " lenient=1";
  out << '\n';
  out << "# initial_edges=" << s.initial_edges << " insertions=" << s.insertions
      << " deletions=" << s.deletions << " queries=" << s.queries << '\n';
  for (const auto& e : seq.initial_edges)
    out << "i " << e.tail << ' ' << e.head << '\n';
  for (const auto& op : seq.ops) {
    switch (op.kind) {
      case OpKind::kAddEdge: out << "a " << op.u << ' ' << op.v << '\n'; break;
      case OpKind::kRemoveEdge: out << "d " << op.u << ' ' << op.v << '\n'; break;
      case OpKind::kQuery: out << "q " << op.u << '\n'; break;
    }
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

OperationSequence load_sequence(const std::filesystem::path& path) {
  return parse_sequence(read_text_file(path));
}

void save_sequence(const OperationSequence& seq,
                   const std::filesystem::path& path) {
  write_text_file(path, format_sequence(seq));
}

}  // namespace dynreach
