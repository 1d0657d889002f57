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

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gmine::cli {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool operator==(const CsvTable&) const = default;
};

// Header plus rows, comma separated, newline terminated. Throws
// std::runtime_error when the path cannot be written.
void emit_csv(const CsvTable& table, const std::string& path);
void write_csv(const CsvTable& table, std::ostream& out);
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

struct TimingReport {
  double wall_ms = 0.0;
  double solutions_per_sec = 0.0;
};

TimingReport timing_report(std::uint64_t solutions, std::chrono::nanoseconds elapsed);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::nanoseconds elapsed() const { return std::chrono::steady_clock::now() - start_; }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Fixed-point text, no locale.
std::string fixed(double value, int decimals);

// Runs one subcommand. Returns 0 on success, 2 on usage errors and 1 on
// runtime errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gmine::cli
