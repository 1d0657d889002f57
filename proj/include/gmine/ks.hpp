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

#include "gmine/enum_stats.hpp"
#include "gmine/static_graph.hpp"

namespace gmine {

// KS-Simple with the first-failing-child cutoff. Start vertices are scanned
// in ascending id order. threads > 1 is honoured only when sink is empty.
EnumStats ks_enumerate(const StaticGraph& g, std::uint32_t k, const Sink& sink = {},
                       unsigned threads = 1);

}  // namespace gmine
