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

// chenbound: evaluate, optimize, verify, constants.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chenbound/cli.hpp"
#include "chenbound/errors.hpp"

namespace {

using namespace chenbound;
using namespace chenbound::cli;

struct Flags {
  std::string config_path;
  int precision = 0;
  std::string format;
  std::string out;
  std::string trace;
  int threads = 0;
  bool paper = false;
  bool dump = false;

  std::string t, u, alpha1, alpha2, alpha3, big_a, epsilon1, epsilon, target, bracket;

  std::string objective, box, fixed_t, t_resolution;
  int budget = 0, rounds = 0;
  bool sensitivity = false;

  std::vector<std::string> checks;
  std::string lo, hi, stride, samples, x, ratio;
  std::vector<std::string> us, zs;
  bool open_lo = false;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read config file '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

bool given(CLI::App& app, const char* name) { return app.count(name) > 0; }

void apply(CLI::App& app, CLI::App& optimize_cmd, CLI::App& verify_cmd, const Flags& f, RunConfig& c) {
  if (given(app, "--precision")) c.precision_digits = f.precision;
  if (given(app, "--format")) c.format = format_from_string(f.format);
  if (given(app, "--out")) c.out = f.out;
  if (given(app, "--threads")) c.threads = f.threads;
  if (f.paper) c.params = paper_params();
  auto real = [&](const char* flag, const std::string& text, double& dst) {
    if (given(app, flag)) dst = parse_real(text);
  };
  real("--t", f.t, c.params.loglog_threshold);
  real("--u", f.u, c.params.u);
  real("--alpha1", f.alpha1, c.params.alpha1);
  real("--alpha2", f.alpha2, c.params.alpha2);
  real("--alpha3", f.alpha3, c.params.alpha3);
  real("--A", f.big_a, c.params.big_a);
  real("--epsilon1", f.epsilon1, c.params.epsilon1);
  real("--target", f.target, c.target);
  if (given(app, "--epsilon")) c.params.epsilon_override = parse_real(f.epsilon);
  if (given(app, "--bracket")) {
    if (f.bracket == "statement") {
      c.bracket_form = BracketForm::statement;
    } else if (f.bracket == "proof") {
      c.bracket_form = BracketForm::proof;
    } else {
      throw UsageError("--bracket must be statement or proof");
    }
  }

  SearchSpec& s = c.search;
  if (given(app, "--target")) s.target_coefficient = c.target;
  if (optimize_cmd.count("--objective")) {
    if (f.objective == "min-threshold") {
      s.objective = Objective::min_threshold;
    } else if (f.objective == "max-coefficient") {
      s.objective = Objective::max_coefficient;
    } else {
      throw UsageError("--objective must be min-threshold or max-coefficient");
    }
  }
  if (optimize_cmd.count("--budget")) s.budget = f.budget;
  if (optimize_cmd.count("--rounds")) s.refinement_rounds = f.rounds;
  if (optimize_cmd.count("--fixed-t")) s.fixed_t = parse_real(f.fixed_t);
  if (optimize_cmd.count("--t-resolution")) s.t_resolution = parse_real(f.t_resolution);
  if (optimize_cmd.count("--trace")) c.trace_out = f.trace;
  if (optimize_cmd.count("--sensitivity")) c.sensitivity = f.sensitivity;
  if (optimize_cmd.count("--box")) {
    if (f.box != "around" && f.box != "degenerate") throw UsageError("--box must be around or degenerate");
    c.search_box_preset = f.box;
    c.search_box_given = false;
  }
  if (f.budget < 0) throw UsageError("--budget must be positive");

  VerifyRequest& v = c.verify;
  if (!f.checks.empty()) v.checks = f.checks;
  auto vreal = [&](const char* flag, const std::string& text, std::optional<double>& dst) {
    if (verify_cmd.count(flag)) dst = parse_real(text);
  };
  auto vcount = [&](const char* flag, const std::string& text, std::optional<u64>& dst) {
    if (verify_cmd.count(flag)) dst = parse_count(text);
  };
  vreal("--lo", f.lo, v.lo);
  vreal("--hi", f.hi, v.hi);
  vreal("--ratio", f.ratio, v.ratio);
  vcount("--stride", f.stride, v.stride);
  vcount("--samples", f.samples, v.samples);
  vcount("--x", f.x, v.x);
  if (verify_cmd.count("--u")) {
    v.u_samples.clear();
    for (const auto& s2 : f.us) v.u_samples.push_back(parse_count(s2));
  }
  if (verify_cmd.count("--z")) {
    v.z_samples.clear();
    for (const auto& s2 : f.zs) v.z_samples.push_back(parse_count(s2));
  }
  if (verify_cmd.count("--open-lo")) v.open_lo = f.open_lo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit constants for a conditional Chen-type bound: evaluate, optimize, verify"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  Flags f;

  app.add_option("--config", f.config_path, "JSON run configuration; flags override its values");
  app.add_option("--precision", f.precision, "Working precision in decimal digits (>= 30)");
  app.add_option("--format", f.format, "json, csv or table");
  app.add_option("--out", f.out, "Write the main artifact to this file");
  app.add_option("--threads", f.threads, "OpenMP threads (0 = runtime default)");
  app.add_flag("--paper-params", f.paper, "Use the reference parameter set");
  app.add_flag("--dump-config", f.dump, "Print the resolved configuration and exit");

  app.add_option("--t", f.t, "log log of the threshold");
  app.add_option("--u", f.u, "Sieve cut u, e.g. 10^4.27");
  app.add_option("--alpha1", f.alpha1, "Level exponent for S(A)");
  app.add_option("--alpha2", f.alpha2, "Level exponent for S(A_q)");
  app.add_option("--alpha3", f.alpha3, "Level exponent for S(B)");
  app.add_option("--A", f.big_a, "Dyadic constant A");
  app.add_option("--epsilon1", f.epsilon1, "Dyadic ratio epsilon1");
  app.add_option("--epsilon", f.epsilon, "Override epsilon(u) by a larger value");
  app.add_option("--target", f.target, "Coefficient target");
  app.add_option("--bracket", f.bracket, "S(B) bracket: statement or proof");

  CLI::App* evaluate = app.add_subcommand("evaluate", "Build a certificate for one parameter set");
  CLI::App* optimize = app.add_subcommand("optimize", "Search parameters");
  optimize->add_option("--objective", f.objective, "min-threshold or max-coefficient");
  optimize->add_option("--budget", f.budget, "Maximum number of evaluations");
  optimize->add_option("--rounds", f.rounds, "Step-halving rounds per coordinate sweep");
  optimize->add_option("--fixed-t", f.fixed_t, "t for max-coefficient");
  optimize->add_option("--t-resolution", f.t_resolution, "Bisection resolution in t");
  optimize->add_option("--box", f.box, "around or degenerate (relative to the start point)");
  optimize->add_option("--trace", f.trace, "Write the CSV trace to this file");
  optimize->add_flag("--sensitivity", f.sensitivity, "Add a sensitivity table for the best point");
  CLI::App* verify = app.add_subcommand("verify", "Run brute-force checks");
  verify->add_option("checks", f.checks,
                     "pi2, chen-decomposition, mertens, bertrand, squarefree, epsilon-product, theta");
  verify->add_option("--lo", f.lo, "Range start");
  verify->add_option("--hi", f.hi, "Range end");
  verify->add_option("--stride", f.stride, "Step between even N");
  verify->add_option("--samples", f.samples, "Number of sample points");
  verify->add_option("--x", f.x, "Evaluation point");
  verify->add_option("--ratio", f.ratio, "Gap ratio for bertrand");
  verify->add_option("--u", f.us, "u samples for epsilon-product");
  verify->add_option("--z", f.zs, "z samples for epsilon-product");
  verify->add_flag("--open-lo", f.open_lo, "Exclude lo from mertens samples");
  CLI::App* constants_cmd = app.add_subcommand("constants", "Print the constant brackets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    RunConfig c;
    bool have_command = false;
    if (!f.config_path.empty()) {
      const auto j = json_io::parse(slurp(f.config_path), f.config_path);
      read_config(j, c);
      have_command = j.contains("command");
    }
    for (auto [sub, cmd] : {std::pair{evaluate, Command::evaluate}, std::pair{optimize, Command::optimize},
                            std::pair{verify, Command::verify}, std::pair{constants_cmd, Command::constants}}) {
      if (sub->parsed()) {
        c.command = cmd;
        have_command = true;
      }
    }
    if (!have_command) throw UsageError("a subcommand is required: evaluate, optimize, verify or constants");
    apply(app, *optimize, *verify, f, c);
    if (f.dump) {
      const RunConfig r = resolved(c);
      validate(r);
      std::cout << write_config(r).dump(2) << '\n';
      return kExitOk;
    }
    return run(c, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
