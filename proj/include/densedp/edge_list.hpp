// Copyright 2026 The densedp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// SNAP-style edge-list ingestion and serialization.

#ifndef DENSEDP_EDGE_LIST_HPP_
#define DENSEDP_EDGE_LIST_HPP_

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "densedp/graph.hpp"
#include "json.hpp"

namespace densedp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParseOptions {
  // Skip the first non-comment line (CSV exports such as "id_1,id_2").
  bool skip_header = false;
};

struct ParsedGraph {
  Graph graph;
  // original_ids[v] is the id the file used for compacted vertex v. Sorted.
  std::vector<std::uint64_t> original_ids;
  BuildStats stats;
};

namespace detail {

inline bool is_separator(char c) {
  return c == ' ' || c == '\t' || c == ',' || c == '\r';
}

}  // namespace detail

// Reads an edge list: '#' or '%' starts a comment line, data lines hold two
// non-negative integer ids separated by whitespace (commas are accepted too).
// Ids are compacted to 0..n-1 in increasing order of the original id. A
// vertex that only ever appears in a self-loop is not materialized.
inline ParsedGraph parse_edge_list(std::istream& in, const ParseOptions& opts = {}) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::uint64_t self_loops = 0;
  std::string line;
  std::size_t line_no = 0;
  bool header_pending = opts.skip_header;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    std::size_t first = 0;
    while (first < rest.size() && detail::is_separator(rest[first])) ++first;
    if (first == rest.size() || rest[first] == '#' || rest[first] == '%') continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    std::uint64_t ids[2];
    int count = 0;
    std::size_t pos = first;
    while (pos < rest.size()) {
      while (pos < rest.size() && detail::is_separator(rest[pos])) ++pos;
      if (pos == rest.size()) break;
      std::size_t end = pos;
      while (end < rest.size() && !detail::is_separator(rest[end])) ++end;
      if (count == 2) throw ParseError(line_no, "expected two vertex ids");
      const auto token = rest.substr(pos, end - pos);
      std::uint64_t value = 0;
      const auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "not a non-negative integer: '" +
                                      std::string(token) + "'");
      }
      ids[count++] = value;
      pos = end;
    }
    if (count != 2) throw ParseError(line_no, "expected two vertex ids");
    if (ids[0] == ids[1]) {
      ++self_loops;
      continue;
    }
    raw.emplace_back(ids[0], ids[1]);
  }

  ParsedGraph out;
  out.original_ids.reserve(2 * raw.size());
  for (const auto& [a, b] : raw) {
    out.original_ids.push_back(a);
    out.original_ids.push_back(b);
  }
  std::sort(out.original_ids.begin(), out.original_ids.end());
  out.original_ids.erase(
      std::unique(out.original_ids.begin(), out.original_ids.end()),
      out.original_ids.end());
  if (out.original_ids.size() > UINT32_MAX) {
    throw std::length_error("too many vertices for 32-bit ids");
  }
  const auto compact = [&](std::uint64_t id) {
    return static_cast<VertexId>(
        std::lower_bound(out.original_ids.begin(), out.original_ids.end(), id) -
        out.original_ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [a, b] : raw) edges.push_back({compact(a), compact(b)});
  raw.clear();
  raw.shrink_to_fit();
  out.graph = Graph::from_edges(static_cast<VertexId>(out.original_ids.size()),
                                edges, &out.stats);
  out.stats.self_loops += self_loops;
  return out;
}

// One "u v" line per edge with u < v, compacted ids. Isolated vertices are
// not representable in the format.
inline void write_edge_list(const Graph& g, std::ostream& out) {
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

// One-line JSON sidecar describing an ingested dataset.
inline nlohmann::json sidecar_json(const ParsedGraph& parsed,
                                   const std::string& id_map_file) {
  return nlohmann::json{{"n", parsed.graph.num_vertices()},
                        {"m", parsed.graph.num_edges()},
                        {"dropped_edges", parsed.stats.dropped()},
                        {"id_map_file", id_map_file}};
}

inline void write_id_map(const ParsedGraph& parsed, std::ostream& out) {
  for (std::uint64_t id : parsed.original_ids) out << id << '\n';
}

}  // namespace densedp

#endif  // DENSEDP_EDGE_LIST_HPP_
