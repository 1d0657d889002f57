// Copyright 2026 The gmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gmine/parse.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

namespace gmine {
namespace {

struct RawLine {
  Label a, b;
  std::uint64_t t;
};

// Splits on blanks and parses up to 3 unsigned tokens; returns the token count.
std::size_t tokenize(const std::string& line, std::size_t lineno, std::uint64_t (&out)[3]) {
  std::size_t count = 0, i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (count == 3) throw ParseError(lineno, "too many tokens");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j)
      throw ParseError(lineno, "malformed token '" + line.substr(i, j - i) + "'");
    out[count++] = value;
    i = j;
  }
  return count;
}

std::vector<RawLine> read_lines(std::istream& in, bool temporal) {
  std::vector<RawLine> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::uint64_t tok[3];
    std::size_t count = tokenize(line, lineno, tok);
    if (!temporal && count == 3)
      throw ParseError(lineno, "format error: 3 tokens in a static edge list");
    if (count != (temporal ? 3u : 2u))
      throw ParseError(lineno, "expected " + std::string(temporal ? "3" : "2") + " tokens");
    rows.push_back({tok[0], tok[1], temporal ? tok[2] : 0});
  }
  return rows;
}

std::vector<Label> compact(const std::vector<RawLine>& rows) {
  std::vector<Label> labels;
  labels.reserve(rows.size() * 2);
  for (auto& r : rows) {
    labels.push_back(r.a);
    labels.push_back(r.b);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

Vertex id_of(const std::vector<Label>& labels, Label l) {
  return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
}

}  // namespace

StaticGraph parse_static(std::istream& in) {
  auto rows = read_lines(in, false);
  auto labels = compact(rows);
  std::vector<Edge> edges;
  edges.reserve(rows.size());
  for (auto& r : rows) edges.emplace_back(id_of(labels, r.a), id_of(labels, r.b));
  auto g = StaticGraph::from_edges(static_cast<Vertex>(labels.size()), std::move(edges));
  g.set_labels(std::move(labels));
  return g;
}

TemporalEdgeList parse_temporal(std::istream& in) {
  auto rows = read_lines(in, true);
  TemporalEdgeList out;
  out.labels = compact(rows);
  out.n = static_cast<Vertex>(out.labels.size());
  for (auto& r : rows) {
    if (r.a == r.b) continue;
    Vertex u = id_of(out.labels, r.a), v = id_of(out.labels, r.b);
    out.edges.push_back({std::min(u, v), std::max(u, v), r.t});
  }
  return out;
}

ParsedInput parse_edge_list(std::istream& in, bool temporal) {
  if (temporal) return parse_temporal(in);
  return parse_static(in);
}

namespace {
std::ifstream open_or_throw(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return f;
}
}  // namespace

StaticGraph load_static(const std::string& path) {
  auto f = open_or_throw(path);
  return parse_static(f);
}

TemporalEdgeList load_temporal(const std::string& path) {
  auto f = open_or_throw(path);
  return parse_temporal(f);
}

}  // namespace gmine
