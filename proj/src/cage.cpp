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

#include "gmine/cage.hpp"

#include <memory>
#include <sstream>

#include "frontier.hpp"

namespace gmine {
namespace {

inline std::uint64_t choose2(std::uint64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }
inline std::uint64_t choose3(std::uint64_t x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; }

// Epoch-stamped membership for one adjacency list at a time.
class Stamp {
 public:
  explicit Stamp(Vertex n) : mark_(n, 0) {}
  void load(std::span<const Vertex> list) {
    if (++epoch_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      epoch_ = 1;
    }
    for (Vertex v : list) mark_[v] = epoch_;
  }
  bool has(Vertex v) const { return mark_[v] == epoch_; }

 private:
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
};

class CageRun {
 public:
  CageRun(const StaticGraph& g, std::uint32_t k, unsigned depth, const CageOptions& opts)
      : fr_(g), g_(g), k_(k), depth_(depth), opts_(opts), nu_(g.n()), nz_(g.n()) {
    explicit_ = static_cast<bool>(opts.sink) || static_cast<bool>(opts.record_sink);
  }

  void run_root(Vertex v, EnumStats& stats) {
    stats_ = &stats;
    fr_.reset(v);
    enumerate(0);
    fr_.clear();
  }

 private:
  bool enumerate(std::size_t start) {
    ++stats_->recursive_calls;
    const std::size_t end = fr_.f().size();
    stats_->max_frontier = std::max<std::uint64_t>(stats_->max_frontier, end);
    if (depth_ == 0 && fr_.s().size() == k_) {
      solved(1);
      if (opts_.sink) emit({});
      return true;
    }
    if (start == end) {
      ++stats_->failure_leaves;
      return false;
    }
    if (fr_.s().size() + depth_ == k_) {
      std::uint64_t local = explicit_ ? base_explicit(start, end) : base_count(start, end);
      solved(local);
      return local > 0;
    }
    bool found = false;
    for (std::size_t i = start; i < end; ++i) {
      auto mark = fr_.add(fr_.f()[i]);
      bool ok = enumerate(i + 1);
      fr_.remove(mark);
      if (!ok) break;
      found = true;
    }
    return found;
  }

  void solved(std::uint64_t count) {
    stats_->solutions += count;
    stats_->success_leaves += count;
  }

  std::uint64_t base_count(std::size_t start, std::size_t end) {
    const auto& f = fr_.f();
    const std::uint64_t live = end - start;
    if (depth_ == 1) return live;
    if (depth_ == 2) {
      std::uint64_t local = choose2(live);
      for (std::size_t i = start; i < end; ++i)
        for (Vertex z : g_.neighbors(f[i])) local += fr_.fresh(z);
      return local;
    }
    std::uint64_t local = choose3(live);  // case 1
    std::uint64_t duplicated = 0;
    for (std::size_t i = start; i < end; ++i) {
      const Vertex u = f[i];
      nu_.load(g_.neighbors(u));
      std::uint64_t udeg = 0;
      for (Vertex z : g_.neighbors(u)) {
        if (!fr_.fresh(z)) continue;
        ++udeg;
        for (Vertex w : g_.neighbors(z))  // case 4
          if (fr_.fresh(w) && !nu_.has(w)) ++local;
        nz_.load(g_.neighbors(z));
        for (std::size_t j = start; j < end; ++j) {  // case 3
          if (j == i) continue;
          if (nz_.has(f[j]))
            ++duplicated;
          else
            ++local;
        }
      }
      local += choose2(udeg);  // case 2
    }
    return local + duplicated / 2;
  }

  // Same partition as base_count, but every completion is materialised.
  std::uint64_t base_explicit(std::size_t start, std::size_t end) {
    const auto& f = fr_.f();
    std::uint64_t local = 0;
    auto one = [&](std::initializer_list<Vertex> extra) {
      ++local;
      if (opts_.sink) emit(extra);
    };
    if (depth_ == 1) {
      for (std::size_t i = start; i < end; ++i) one({f[i]});
      return local;
    }
    if (depth_ == 2) {
      for (std::size_t i = start; i < end; ++i)
        for (std::size_t j = i + 1; j < end; ++j) one({f[i], f[j]});
      for (std::size_t i = start; i < end; ++i)
        for (Vertex z : g_.neighbors(f[i]))
          if (fr_.fresh(z)) one({f[i], z});
      return local;
    }
    if (opts_.record_sink && end - start >= 3)
      record(1, std::vector<Label>(f.begin() + start, f.begin() + end));
    if (opts_.sink) {
      for (std::size_t a = start; a < end; ++a)
        for (std::size_t b = a + 1; b < end; ++b)
          for (std::size_t c = b + 1; c < end; ++c) one({f[a], f[b], f[c]});
    } else {
      local += choose3(end - start);
    }
    for (std::size_t i = start; i < end; ++i) {
      const Vertex u = f[i];
      nu_.load(g_.neighbors(u));
      std::vector<Vertex> zs;
      for (Vertex z : g_.neighbors(u)) {
        if (!fr_.fresh(z)) continue;
        zs.push_back(z);
        for (Vertex w : g_.neighbors(z))
          if (fr_.fresh(w) && !nu_.has(w)) {
            one({u, z, w});
            record(4, {u, z, w});
          }
        nz_.load(g_.neighbors(z));
        for (std::size_t j = start; j < end; ++j) {
          if (j == i) continue;
          const Vertex v = f[j];
          // A common neighbor z of u and v is reported from the smaller of the two.
          if (nz_.has(v) && v < u) continue;
          one({u, v, z});
          record(3, {u, v, z});
        }
      }
      for (std::size_t a = 0; a < zs.size(); ++a)
        for (std::size_t b = a + 1; b < zs.size(); ++b) {
          one({u, zs[a], zs[b]});
          record(2, {u, zs[a], zs[b]});
        }
    }
    return local;
  }

  void emit(std::initializer_list<Vertex> extra) {
    out_.assign(fr_.s().begin(), fr_.s().end());
    out_.insert(out_.end(), extra.begin(), extra.end());
    std::sort(out_.begin(), out_.end());
    opts_.sink(out_);
  }

  void record(int tag, std::vector<Label> choice) {
    if (!opts_.record_sink) return;
    CompressedRecord rec;
    rec.fixed.assign(fr_.s().begin(), fr_.s().end());
    rec.tag = tag;
    rec.choice = std::move(choice);
    opts_.record_sink(rec);
  }

  detail::Frontier fr_;
  const StaticGraph& g_;
  std::uint32_t k_;
  unsigned depth_;
  const CageOptions& opts_;
  bool explicit_ = false;
  Stamp nu_, nz_;
  EnumStats* stats_ = nullptr;
  std::vector<Vertex> out_;
};

}  // namespace

EnumStats cage_enumerate(const StaticGraph& g, std::uint32_t k, const CageOptions& opts) {
  if (opts.depth < 1 || opts.depth > 3) throw UsageError("cage_enumerate: depth must be 1, 2 or 3");
  if (k < 1 || k > g.n()) throw UsageError("cage_enumerate: k must be in [1, n]");
  if (opts.record_sink && (opts.depth != 3 || k < 4))
    throw UsageError("compressed output needs depth 3 and k >= 4");
  const unsigned depth = std::min<unsigned>(opts.depth, k - 1);
  unsigned threads = (opts.sink || opts.record_sink) ? 1 : opts.threads;
  return detail::for_each_root(
      g.n(), threads, [&] { return std::make_unique<CageRun>(g, k, depth, opts); },
      [&](auto& run, Vertex v, EnumStats& stats) { run->run_root(v, stats); });
}

std::uint64_t record_size(const CompressedRecord& rec) {
  return rec.tag == 1 ? choose3(rec.choice.size()) : 1;
}

std::vector<std::vector<Label>> decompress(const CompressedRecord& rec) {
  std::vector<std::vector<Label>> out;
  auto push = [&](std::initializer_list<Label> extra) {
    std::vector<Label> s(rec.fixed);
    s.insert(s.end(), extra.begin(), extra.end());
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  };
  const auto& c = rec.choice;
  if (rec.tag == 1) {
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        for (std::size_t d = b + 1; d < c.size(); ++d) push({c[a], c[b], c[d]});
  } else {
    push({c[0], c[1], c[2]});
  }
  return out;
}

std::string format_record(const CompressedRecord& rec, const StaticGraph* labels) {
  auto lab = [&](Label v) { return labels ? labels->label(static_cast<Vertex>(v)) : v; };
  std::ostringstream os;
  os << 'F';
  for (Label v : rec.fixed) os << ' ' << lab(v);
  os << " | C" << rec.tag;
  for (Label v : rec.choice) os << ' ' << lab(v);
  return os.str();
}

CompressedRecord parse_record(const std::string& line, std::size_t lineno) {
  std::istringstream is(line);
  std::string tok;
  CompressedRecord rec;
  if (!(is >> tok) || tok != "F") throw ParseError(lineno, "record must start with F");
  bool bar = false;
  while (is >> tok) {
    if (tok == "|") {
      bar = true;
      break;
    }
    try {
      std::size_t pos = 0;
      rec.fixed.push_back(std::stoull(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError(lineno, "bad vertex '" + tok + "'");
    }
  }
  if (!bar || !(is >> tok) || tok.size() != 2 || tok[0] != 'C' || tok[1] < '1' || tok[1] > '4')
    throw ParseError(lineno, "expected '| C1'..'| C4'");
  rec.tag = tok[1] - '0';
  while (is >> tok) {
    try {
      std::size_t pos = 0;
      rec.choice.push_back(std::stoull(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError(lineno, "bad vertex '" + tok + "'");
    }
  }
  if (rec.tag == 1 ? rec.choice.size() < 3 : rec.choice.size() != 3)
    throw ParseError(lineno, "wrong number of choice vertices");
  return rec;
}

}  // namespace gmine
