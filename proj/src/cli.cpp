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

#include "gmine/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "gmine/amortized.hpp"
#include "gmine/cage.hpp"
#include "gmine/ks.hpp"
#include "gmine/oracle.hpp"
#include "gmine/orientation.hpp"
#include "gmine/parse.hpp"
#include "gmine/temporal.hpp"

namespace gmine::cli {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

void write_csv(const CsvTable& table, std::ostream& out) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].find_first_of(",\n\r") != std::string::npos)
        throw UsageError("csv cell contains a separator: " + cells[i]);
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(table.header);
  for (auto& r : table.rows) {
    if (r.size() != table.header.size()) throw UsageError("csv row width does not match header");
    line(r);
  }
}

void emit_csv(const CsvTable& table, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  write_csv(table, f);
  if (!f.flush()) throw std::runtime_error("write failed: " + path);
}

CsvTable read_csv(std::istream& in) {
  CsvTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      auto comma = line.find(',', pos);
      cells.push_back(line.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (first) {
      t.header = std::move(cells);
      first = false;
    } else {
      t.rows.push_back(std::move(cells));
    }
  }
  return t;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_csv(f);
}

TimingReport timing_report(std::uint64_t solutions, std::chrono::nanoseconds elapsed) {
  TimingReport r;
  r.wall_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  double secs = std::chrono::duration<double>(elapsed).count();
  r.solutions_per_sec = secs > 0.0 ? static_cast<double>(solutions) / secs : 0.0;
  return r;
}

namespace {

struct Output {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream;

  Output(const std::string& path, std::ostream& fallback) : stream(&fallback) {
    if (path.empty()) return;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw std::runtime_error("cannot write " + path);
    stream = file.get();
  }
};

void print_labels(std::ostream& os, const StaticGraph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << g.label(vs[i]);
  os << '\n';
}

struct Summary {
  std::uint64_t solutions = 0;
  std::vector<std::pair<std::string, std::string>> extra;
  void add(const std::string& key, const std::string& value) { extra.emplace_back(key, value); }
  void add(const std::string& key, std::uint64_t value) { extra.emplace_back(key, std::to_string(value)); }
};

struct Flags {
  std::string input, output;
  std::uint32_t k = 0;
  unsigned depth = 3;
  std::string algo = "cage";
  std::string mode = "count";
  unsigned threads = 1;
  std::uint64_t bucket_width = 1;
  std::string h_policy = "one";
  std::string classes;
  double epsilon_zero = kDefaultEpsilonZero;
  std::uint32_t h = 1;
  std::uint32_t window = 1;
  double epsilon = 0.5;
  std::optional<std::uint32_t> b_override;
  std::string ladder, witness;
  std::string oracle_kind;
};

Summary run_graphlets(const Flags& f, std::ostream& out) {
  if (f.k < 1) throw UsageError("--k must be at least 1");
  if (f.threads < 1) throw UsageError("--threads must be at least 1");
  if (f.mode == "compressed" && (f.algo != "cage" || f.depth != 3 || f.k < 4))
    throw UsageError("--mode compressed needs --algo cage, --depth 3 and --k >= 4");
  if (f.algo != "cage" && f.depth != 3) throw UsageError("--depth applies to --algo cage only");
  auto g = load_static(f.input);
  if (f.k > g.n()) throw UsageError("--k exceeds the number of vertices");
  Output dest(f.mode == "count" ? std::string() : f.output, out);
  Sink sink;
  if (f.mode == "list") sink = [&](std::span<const Vertex> s) { print_labels(*dest.stream, g, s); };
  EnumStats st;
  if (f.algo == "ks") {
    st = ks_enumerate(g, f.k, sink, f.threads);
  } else if (f.algo == "amortized") {
    st = amortized_enum(g, f.k, sink);
  } else {
    CageOptions opts;
    opts.depth = f.depth;
    opts.threads = f.threads;
    opts.sink = sink;
    if (f.mode == "compressed")
      opts.record_sink = [&](const CompressedRecord& r) { *dest.stream << format_record(r, &g) << '\n'; };
    st = cage_enumerate(g, f.k, opts);
  }
  Summary s;
  s.solutions = st.solutions;
  s.add("calls", st.recursive_calls);
  if (f.algo == "ks") {
    auto rep = failure_leaf_report(st);
    s.add("failure_leaves", rep.failure_leaves);
    s.add("failure_pct", fixed(rep.failure_pct, 2));
  }
  return s;
}

Summary run_graphlets_all(const Flags& f, std::ostream& out) {
  auto g = load_static(f.input);
  Output dest(f.mode == "list" ? f.output : std::string(), out);
  Sink sink;
  if (f.mode == "list") sink = [&](std::span<const Vertex> s) { print_labels(*dest.stream, g, s); };
  Summary s;
  s.solutions = enum_all_graphlets(g, sink);
  return s;
}

Summary run_edge_graphlets(const Flags& f, std::ostream& out) {
  if (f.k < 1) throw UsageError("--k must be at least 1");
  auto g = load_static(f.input);
  if (f.k > g.m()) throw UsageError("--k exceeds the number of edges");
  Output dest(f.mode == "list" ? f.output : std::string(), out);
  EdgeSink sink;
  if (f.mode == "list")
    sink = [&](std::span<const Edge> es) {
      for (std::size_t i = 0; i < es.size(); ++i)
        *dest.stream << (i ? " " : "") << g.label(es[i].first) << '-' << g.label(es[i].second);
      *dest.stream << '\n';
    };
  Summary s;
  s.solutions = edge_graphlets(g, f.k, sink);
  return s;
}

Summary run_coreness(const Flags& f) {
  auto g = load_static(f.input);
  auto core = coreness_fast(g);
  CsvTable t{{"node", "coreness"}, {}};
  std::uint32_t top = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    t.rows.push_back({std::to_string(g.label(v)), std::to_string(core[v])});
    top = std::max(top, core[v]);
  }
  if (!f.output.empty()) emit_csv(t, f.output);
  Summary s;
  s.solutions = g.n();
  s.add("max_core", top);
  return s;
}

HPolicy parse_policy(const std::string& p) {
  if (p == "one") return HPolicy::kOne;
  if (p == "half") return HPolicy::kHalf;
  return HPolicy::kFull;
}

Summary run_temporal_resilience(const Flags& f) {
  if (f.bucket_width < 1) throw UsageError("--bucket-width must be positive");
  if (!(f.epsilon_zero >= 0.0)) throw UsageError("--epsilon-zero must be non-negative");
  auto raw = load_temporal(f.input);
  auto gt = bucket_snapshots(raw, f.bucket_width);
  if (gt.tau() < 2) throw UsageError("temporal-resilience needs at least 2 snapshots");
  SnapshotTree tree(gt);
  auto rows = arcd_series(tree, parse_policy(f.h_policy));
  auto label = [&](Vertex v) { return gt.labels.empty() ? Label{v} : gt.labels[v]; };
  if (!f.output.empty()) {
    CsvTable t{{"node", "W", "h", "arcd"}, {}};
    for (auto& r : rows)
      t.rows.push_back({std::to_string(label(r.node)), std::to_string(r.w), std::to_string(r.h), fixed(r.arcd, 6)});
    emit_csv(t, f.output);
  }
  auto cls = falling_points(rows, f.epsilon_zero);
  if (!f.classes.empty()) {
    CsvTable t{{"node", "falling_W"}, {}};
    for (auto& [v, w] : cls) t.rows.push_back({std::to_string(label(v)), w ? std::to_string(*w) : "none"});
    emit_csv(t, f.classes);
  }
  Summary s;
  s.solutions = rows.size();
  s.add("tau", tree.tau());
  s.add("windows", window_grid(tree.tau()).size());
  return s;
}

Summary run_khd_core(const Flags& f) {
  if (f.bucket_width < 1) throw UsageError("--bucket-width must be positive");
  auto raw = load_temporal(f.input);
  auto gt = bucket_snapshots(raw, f.bucket_width);
  if (gt.tau() == 0) throw UsageError("khd-core needs at least one snapshot");
  SnapshotTree tree(gt);
  auto cores = khd_cores(tree, f.k, f.h, f.window);
  CsvTable t{{"window_start", "window_end", "h", "k", "vertex"}, {}};
  Summary s;
  for (auto& wc : cores)
    for (Vertex v : wc.core) {
      ++s.solutions;
      t.rows.push_back({std::to_string(wc.start), std::to_string(wc.end), std::to_string(f.h), std::to_string(f.k),
                        std::to_string(gt.labels.empty() ? Label{v} : gt.labels[v])});
    }
  if (!f.output.empty()) emit_csv(t, f.output);
  s.add("windows", cores.size());
  return s;
}

Summary run_densest(const Flags& f) {
  auto g = load_static(f.input);
  auto run = run_densest(g, f.epsilon, f.b_override);
  if (!f.ladder.empty()) {
    CsvTable t{{"i", "threshold", "set_size", "induced_density"}, {}};
    for (auto& step : run.ladder) {
      double d = step.set.empty() ? 0.0 : static_cast<double>(oracle::induced_edges(g, step.set)) / step.set.size();
      t.rows.push_back({std::to_string(step.i), fixed(step.threshold, 6), std::to_string(step.set.size()), fixed(d, 6)});
    }
    emit_csv(t, f.ladder);
  }
  if (!f.witness.empty()) {
    std::ofstream w(f.witness);
    if (!w) throw std::runtime_error("cannot write " + f.witness);
    for (Vertex v : run.subgraph.set) w << g.label(v) << '\n';
  }
  Summary s;
  s.solutions = run.subgraph.set.size();
  s.add("estimate", fixed(run.estimate, 6));
  s.add("density", fixed(run.subgraph.density, 6));
  s.add("b", run.params.b);
  s.add("invariant", run.invariant_ok ? "ok" : "violated");
  return s;
}

Summary run_oracle(const Flags& f, std::ostream& out) {
  auto g = load_static(f.input);
  Summary s;
  if (f.oracle_kind == "graphlets") {
    if (f.k < 1 || f.k > g.n()) throw UsageError("--k must be in [1, n]");
    auto res = oracle::brute_k_graphlets(g, f.k);
    s.solutions = res.count;
    if (f.mode == "list") {
      Output dest(f.output, out);
      for (auto& sol : res.solutions) print_labels(*dest.stream, g, sol);
    }
  } else if (f.oracle_kind == "coreness") {
    auto core = oracle::peel_coreness(g);
    CsvTable t{{"node", "coreness"}, {}};
    for (Vertex v = 0; v < g.n(); ++v) t.rows.push_back({std::to_string(g.label(v)), std::to_string(core[v])});
    if (!f.output.empty()) emit_csv(t, f.output);
    s.solutions = g.n();
  } else {
    auto res = oracle::brute_densest(g);
    s.solutions = res.witness.size();
    s.add("density", fixed(res.density.value(), 6));
  }
  return s;
}

Summary run_decompress(const Flags& f, std::ostream& out) {
  std::ifstream in(f.input);
  if (!in) throw std::runtime_error("cannot open " + f.input);
  Output dest(f.output, out);
  Summary s;
  std::string line;
  std::size_t lineno = 0, records = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto rec = parse_record(line, lineno);
    ++records;
    for (auto& sol : decompress(rec)) {
      for (std::size_t i = 0; i < sol.size(); ++i) *dest.stream << (i ? " " : "") << sol[i];
      *dest.stream << '\n';
      ++s.solutions;
    }
  }
  s.add("records", records);
  return s;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gmine: graphlet enumeration, temporal cores and densest subgraphs"};
  app.require_subcommand(1);
  Flags f;

  auto add_input = [&](CLI::App* sub) { sub->add_option("--input,-i", f.input, "Edge list")->required(); };
  auto add_k = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--k", f.k, "Graphlet size");
    if (required) o->required();
  };
  auto add_mode = [&](CLI::App* sub, std::vector<std::string> modes) {
    sub->add_option("--mode", f.mode, "Output mode")->check(CLI::IsMember(modes));
  };

  auto* graphlets = app.add_subcommand("graphlets", "Enumerate connected induced k-vertex subgraphs");
  add_input(graphlets);
  add_k(graphlets, true);
  graphlets->add_option("--algo", f.algo, "ks, amortized or cage")->check(CLI::IsMember({"ks", "amortized", "cage"}));
  graphlets->add_option("--depth", f.depth, "CAGE completion depth")->check(CLI::Range(1u, 3u));
  add_mode(graphlets, {"count", "list", "compressed"});
  graphlets->add_option("--threads", f.threads, "Worker cap for count mode");
  graphlets->add_option("--output,-o", f.output, "Destination for list or compressed output");

  auto* all = app.add_subcommand("graphlets-all", "Enumerate connected induced subgraphs of every size");
  add_input(all);
  add_mode(all, {"count", "list"});
  all->add_option("--output,-o", f.output, "Destination for list output");

  auto* edge = app.add_subcommand("edge-graphlets", "Enumerate connected k-edge subgraphs");
  add_input(edge);
  add_k(edge, true);
  add_mode(edge, {"count", "list"});
  edge->add_option("--output,-o", f.output, "Destination for list output");

  auto* core = app.add_subcommand("coreness", "Core numbers");
  add_input(core);
  core->add_option("--output,-o", f.output, "CSV node,coreness");

  auto* res = app.add_subcommand("temporal-resilience", "ARCD series and falling points");
  add_input(res);
  res->add_option("--bucket-width", f.bucket_width, "Timestamp span per snapshot");
  res->add_option("--h-policy", f.h_policy, "one, half or full")->check(CLI::IsMember({"one", "half", "full"}));
  res->add_option("--output,-o", f.output, "resilience.csv");
  res->add_option("--classes", f.classes, "classes.csv");
  res->add_option("--epsilon-zero", f.epsilon_zero, "ARCD zero threshold");

  auto* khd = app.add_subcommand("khd-core", "(k, h, W)-cores of every window");
  khd->set_help_flag("--help", "Print this help message and exit");
  add_input(khd);
  add_k(khd, true);
  khd->add_option("--h", f.h, "Minimum edge occurrences")->required();
  khd->add_option("--window,-W", f.window, "Window length in snapshots")->required();
  khd->add_option("--bucket-width", f.bucket_width, "Timestamp span per snapshot");
  khd->add_option("--output,-o", f.output, "cores.csv");

  auto* dense = app.add_subcommand("densest", "Approximate densest subgraph via fractional orientation");
  add_input(dense);
  dense->add_option("--epsilon", f.epsilon, "Approximation parameter in (0, 1]");
  dense->add_option("--b-override", f.b_override, "Copies per edge");
  dense->add_option("--emit-ladder", f.ladder, "CSV i,threshold,set_size,induced_density");
  dense->add_option("--emit-witness", f.witness, "Witness vertex labels");

  auto* orc = app.add_subcommand("oracle", "Brute-force references for small graphs");
  orc->add_option("kind", f.oracle_kind, "graphlets, coreness or densest")
      ->required()
      ->check(CLI::IsMember({"graphlets", "coreness", "densest"}));
  add_input(orc);
  add_k(orc, false);
  add_mode(orc, {"count", "list"});
  orc->add_option("--output,-o", f.output, "Destination for list or CSV output");

  auto* dec = app.add_subcommand("decompress", "Expand a compressed solution stream");
  add_input(dec);
  dec->add_option("--output,-o", f.output, "Destination for solutions");

  std::vector<const char*> argv{"gmine"};
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    Stopwatch clock;
    Summary s;
    if (graphlets->parsed()) s = run_graphlets(f, out);
    else if (all->parsed()) s = run_graphlets_all(f, out);
    else if (edge->parsed()) s = run_edge_graphlets(f, out);
    else if (core->parsed()) s = run_coreness(f);
    else if (res->parsed()) s = run_temporal_resilience(f);
    else if (khd->parsed()) s = run_khd_core(f);
    else if (dense->parsed()) s = run_densest(f);
    else if (orc->parsed()) s = run_oracle(f, out);
    else s = run_decompress(f, out);
    auto t = timing_report(s.solutions, clock.elapsed());
    out << "solutions=" << s.solutions << " time_ms=" << fixed(t.wall_ms, 3);
    for (auto& [key, value] : s.extra) out << ' ' << key << '=' << value;
    out << '\n';
    out.flush();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, out, err);
}

}  // namespace gmine::cli
