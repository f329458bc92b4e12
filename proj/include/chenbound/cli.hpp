// Copyright 2026 The chenbound Authors
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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chenbound/json_io.hpp"
#include "chenbound/kernels.hpp"

namespace chenbound::cli {

using kernels::u64;

enum class Command { evaluate, optimize, verify, constants };
enum class OutputFormat { json, csv, table };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // infeasible certificate or violations
inline constexpr int kExitUsage = 2;

// Unset fields fall back to per-check defaults.
struct VerifyRequest {
  std::vector<std::string> checks;
  std::optional<double> lo;
  std::optional<double> hi;
  std::optional<u64> stride;
  std::optional<u64> samples;
  std::optional<u64> x;
  std::optional<double> ratio;
  std::vector<u64> u_samples;
  std::vector<u64> z_samples;
  bool open_lo = false;
};

struct RunConfig {
  Command command = Command::evaluate;
  // Starts at the reference parameter set; fields are overridden one by one.
  ChenParams params = paper_params();
  BracketForm bracket_form = default_bracket_form();
  // evaluate exits 1 below this; 0 means "positive".
  double target = 0;
  bool sensitivity = false;
  SearchSpec search;
  bool search_box_given = false;
  // "around" or "degenerate": the box is built around the start point when
  // the configuration is resolved.
  std::string search_box_preset;
  bool search_start_given = false;
  VerifyRequest verify;
  int precision_digits = 50;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> out;
  std::optional<std::string> trace_out;
  int threads = 0;
};

Command command_from_string(const std::string& s);
std::string to_string(Command c);
OutputFormat format_from_string(const std::string& s);
std::string to_string(OutputFormat f);

// Strict: unknown keys throw UsageError naming the key.
void read_config(const json_io::json& j, RunConfig& into);
json_io::ordered_json write_config(const RunConfig& c);
void validate(const RunConfig& c);

// Fills search.start and search.box from params when they were not given
// and applies a box preset.
RunConfig resolved(RunConfig c);

// Runs one command. The main artifact goes to `out` unless an output path
// is set; diagnostics go to `err`.
int run(const RunConfig& c, std::ostream& out, std::ostream& err);

// Integer option in "1e7" or "10^6" notation.
u64 parse_count(const std::string& text);

}  // namespace chenbound::cli
