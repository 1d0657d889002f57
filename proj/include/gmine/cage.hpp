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

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gmine/enum_stats.hpp"
#include "gmine/static_graph.hpp"

namespace gmine {

// One compressed family of solutions: fixed part S plus a completion rule.
//   C1 a1..ap : any 3 of the a's
//   C2 u z1 z2, C3 u v z, C4 u z w : exactly these 3
// Values are vertex ids as produced, or labels once written with a label map.
struct CompressedRecord {
  std::vector<Label> fixed;
  int tag = 1;
  std::vector<Label> choice;
  bool operator==(const CompressedRecord&) const = default;
};

using RecordSink = std::function<void(const CompressedRecord&)>;

struct CageOptions {
  unsigned depth = 3;
  unsigned threads = 1;
  Sink sink;                // explicit solutions
  RecordSink record_sink;   // compressed families; needs depth 3 and k >= 4
};

// Recursion stops at |S| = k - depth and the last vertices are completed
// combinatorially. depth is clamped to k - 1 so every k >= 1 works.
EnumStats cage_enumerate(const StaticGraph& g, std::uint32_t k, const CageOptions& opts = {});

// Solutions encoded by one record, as sorted sets.
std::vector<std::vector<Label>> decompress(const CompressedRecord& rec);
std::uint64_t record_size(const CompressedRecord& rec);

// Text form "F v1 .. | Ct x1 ..". With a graph, ids are mapped to its labels.
std::string format_record(const CompressedRecord& rec, const StaticGraph* labels = nullptr);
CompressedRecord parse_record(const std::string& line, std::size_t lineno = 0);

}  // namespace gmine
