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

#pragma once

#include <istream>
#include <string>
#include <variant>
#include <vector>

#include "gmine/static_graph.hpp"

namespace gmine {

struct TemporalEdge {
  Vertex u;
  Vertex v;
  std::uint64_t t;
};

// Raw temporal stream: every timestamped occurrence is kept, self-loops dropped.
struct TemporalEdgeList {
  Vertex n = 0;
  std::vector<Label> labels;
  std::vector<TemporalEdge> edges;
};

// Lines starting with '#' and blank lines are skipped. Labels are compacted
// to 0..n-1 in ascending label order.
StaticGraph parse_static(std::istream& in);
TemporalEdgeList parse_temporal(std::istream& in);

using ParsedInput = std::variant<StaticGraph, TemporalEdgeList>;
ParsedInput parse_edge_list(std::istream& in, bool temporal);

StaticGraph load_static(const std::string& path);
TemporalEdgeList load_temporal(const std::string& path);

}  // namespace gmine
