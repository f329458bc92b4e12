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

#include "chenbound/cli.hpp"

#include <omp.h>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "chenbound/errors.hpp"
#include "chenbound/format.hpp"
#include "chenbound/oracle_verifier.hpp"
#include "chenbound/prime_toolkit.hpp"

namespace chenbound::cli {
namespace {

using json_io::json;
using json_io::ordered_json;

constexpr const char* kChecks[] = {"pi2",         "chen-decomposition", "mertens", "bertrand",
                                   "squarefree",  "epsilon-product",    "theta"};

bool known_check(const std::string& id) {
  for (const char* c : kChecks) {
    if (id == c) return true;
  }
  return false;
}

u64 as_count(double v, const std::string& what) {
  if (!(v >= 0) || v != std::floor(v) || v > 1.8e19) {
    throw UsageError(what + " must be a non-negative integer");
  }
  return static_cast<u64>(v);
}

u64 read_count(const json& v, const std::string& path) {
  return as_count(json_io::read_real(v, path), path);
}

std::vector<u64> read_counts(const json& v, const std::string& path) {
  if (!v.is_array()) throw UsageError(path + ": expected an array");
  std::vector<u64> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_count(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

void reject_unknown(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw UsageError(path + ": expected an object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw UsageError("unknown key '" + (path.empty() ? k : path + "." + k) + "'");
  }
}

BracketForm bracket_from_string(const std::string& s) {
  if (s == "statement") return BracketForm::statement;
  if (s == "proof") return BracketForm::proof;
  throw UsageError("bracket_form must be \"statement\" or \"proof\"");
}

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' ');
}

struct Artifact {
  std::string text;
  int status = kExitOk;
};

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (!c.out) {
    out << text;
    return;
  }
  std::ofstream f(*c.out, std::ios::binary);
  if (!f) throw ResourceError("cannot open output file '" + *c.out + "'");
  f << text;
  if (!f) throw ResourceError("cannot write output file '" + *c.out + "'");
}

// ---- evaluate ----

Artifact do_evaluate(const RunConfig& c) {
  validate_ranges(c.params);
  const BoundCertificate cert = chen_coefficient(c.params, c.precision_digits, c.bracket_form);
  Artifact a;
  const bool ok = c.target > 0 ? cert.feasible(c.target) : cert.positive();
  a.status = ok ? kExitOk : kExitFailed;
  std::ostringstream os;
  switch (c.format) {
    case OutputFormat::json:
      os << cert.to_json() << '\n';
      break;
    case OutputFormat::csv:
      os << "label,decimal,direction,ref\n";
      for (const auto& v : cert.values) {
        os << v.label << ',' << v.value.as(v.direction, c.precision_digits).decimal() << ','
           << to_string(v.direction) << ",\"" << v.ref << "\"\n";
      }
      break;
    case OutputFormat::table: {
      os << "conditions\n";
      for (const auto& k : cert.conditions) {
        os << "  " << pad(k.id, 28) << pad(k.scope, 8) << pad(k.satisfied ? "ok" : "FAILED", 8)
           << shortest(k.margin) << '\n';
      }
      os << "values\n";
      for (const auto& v : cert.values) {
        os << "  " << pad(v.label, 14) << pad(v.value.as(v.direction, 20).decimal(), 30)
           << pad(std::string(to_string(v.direction)), 6) << v.ref << '\n';
      }
      if (cert.final_coefficient) {
        os << "final (down)  " << cert.final_down().decimal() << '\n';
        if (cert.positive()) os << "corollary margin (down)  " << corollary_margin(cert).decimal(12) << '\n';
      } else {
        os << "final         not evaluable: " << cert.failure << '\n';
      }
      os << "feasible      " << (ok ? "yes" : "no") << '\n';
      break;
    }
  }
  a.text = os.str();
  return a;
}

// ---- optimize ----

Artifact do_optimize(const RunConfig& c, std::ostream& err) {
  const SearchSpec& spec = c.search;
  validate_ranges(spec.start);
  const SearchResult r = optimize(spec);
  if (r.budget_exhausted) err << "optimize: evaluation budget exhausted\n";
  Artifact a;
  a.status = r.feasible ? kExitOk : kExitFailed;
  std::vector<SensitivityRow> sens;
  if (c.sensitivity && r.best_certificate && r.best_certificate->positive()) {
    SensitivitySpec ss;
    ss.precision_digits = spec.precision_digits;
    sens = sensitivity(r.best_params, ss);
  }
  if (c.trace_out) {
    std::ofstream f(*c.trace_out, std::ios::binary);
    if (!f) throw ResourceError("cannot open trace file '" + *c.trace_out + "'");
    f << trace_csv(r);
  }
  switch (c.format) {
    case OutputFormat::json: {
      ordered_json j = json_io::write_result(r, spec);
      j["search"] = json_io::write_search(spec);
      if (c.sensitivity) j["sensitivity"] = json_io::write_sensitivity(sens);
      a.text = j.dump(2) + "\n";
      break;
    }
    case OutputFormat::csv:
      a.text = trace_csv(r);
      break;
    case OutputFormat::table: {
      std::ostringstream os;
      os << "objective     " << (spec.objective == Objective::min_threshold ? "min_threshold" : "max_coefficient")
         << '\n';
      os << "evaluations   " << r.trace.size() << (r.budget_exhausted ? " (budget exhausted)" : "") << '\n';
      os << "feasible      " << (r.feasible ? "yes" : "no") << '\n';
      const auto p = json_io::write_params(r.best_params);
      for (const auto& [k, v] : p.items()) os << "  " << pad(k, 12) << v.get<std::string>() << '\n';
      if (r.best_certificate && r.best_certificate->final_coefficient) {
        os << "coefficient   " << r.best_certificate->final_down().decimal() << '\n';
      }
      for (const auto& s : sens) {
        os << "  d/" << pad(s.parameter, 10) << pad(s.relative_minus ? shortest(*s.relative_minus) : "n/a", 26)
           << (s.relative_plus ? shortest(*s.relative_plus) : "n/a") << '\n';
      }
      a.text = os.str();
      break;
    }
  }
  return a;
}

// ---- verify ----

u64 lo_or(const VerifyRequest& v, double d) { return as_count(v.lo.value_or(d), "lo"); }
u64 hi_or(const VerifyRequest& v, double d) { return as_count(v.hi.value_or(d), "hi"); }

VerificationReport run_check(const std::string& id, const VerifyRequest& v) {
  if (id == "pi2") return check_pi2(lo_or(v, 4), hi_or(v, 1e4), v.stride.value_or(2));
  if (id == "chen-decomposition") {
    return check_chen_decomposition(lo_or(v, 1e4), hi_or(v, 2e4), v.stride.value_or(2));
  }
  if (id == "mertens") {
    return check_mertens(v.lo.value_or(3), v.hi.value_or(1e8), v.samples.value_or(10000), !v.open_lo);
  }
  if (id == "bertrand") return prime_gap_scan(lo_or(v, 9551), hi_or(v, 1e7), v.ratio.value_or(0.996));
  if (id == "squarefree") return check_squarefree(v.x.value_or(1000000000ULL));
  if (id == "epsilon-product") {
    const std::vector<u64> us = v.u_samples.empty() ? std::vector<u64>{9551, 100000} : v.u_samples;
    const std::vector<u64> zs =
        v.z_samples.empty() ? std::vector<u64>{1000000, 100000000} : v.z_samples;
    return check_epsilon_product(us, zs);
  }
  if (id == "theta") return check_theta(hi_or(v, 1e8));
  throw UsageError("unknown check '" + id + "'");
}

Artifact do_verify(const RunConfig& c) {
  std::vector<VerificationReport> reports;
  for (const auto& id : c.verify.checks) reports.push_back(run_check(id, c.verify));
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  Artifact a;
  a.status = passed ? kExitOk : kExitFailed;
  std::ostringstream os;
  switch (c.format) {
    case OutputFormat::json: {
      ordered_json j;
      j["schema_version"] = 1;
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(json_io::write_report(r));
      j["reports"] = arr;
      j["passed"] = passed;
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      os << "check_id,witness,lhs,rhs,margin\n";
      for (const auto& r : reports) {
        for (const auto& x : r.violations) {
          os << r.check_id << ',' << x.witness << ',' << x.lhs << ',' << x.rhs << ',' << shortest(x.margin)
             << '\n';
        }
      }
      break;
    case OutputFormat::table:
      for (const auto& r : reports) {
        os << pad(r.check_id, 20) << "[" << r.range_lo << ", " << r.range_hi << "]  points " << r.points_checked
           << "  violations " << r.violations.size() << "  worst " << shortest(r.worst_margin);
        if (!r.worst_witness.empty()) os << " at " << r.worst_witness;
        os << (r.informational ? "  (informational)" : "") << "  " << (r.passed() ? "PASS" : "FAIL") << '\n';
        std::size_t shown = 0;
        for (const auto& x : r.violations) {
          if (++shown > 20) break;
          os << "    " << x.witness << "  lhs " << x.lhs << "  rhs " << x.rhs << '\n';
        }
      }
      break;
  }
  a.text = os.str();
  return a;
}

// ---- constants ----

Artifact do_constants(const RunConfig& c) {
  const ConstantsBundle& b = constants(c.precision_digits);
  const auto checks = verify_constants(c.precision_digits);
  Artifact a;
  for (const auto& k : checks) {
    if (!k.ok) a.status = kExitFailed;
  }
  const Bracket cb = cbar(c.precision_digits);
  const std::pair<const char*, const Bracket*> rows[] = {{"gamma", &b.gamma},
                                                         {"mertens_M", &b.mertens_m},
                                                         {"twin_prime_product", &b.twin_prime_product},
                                                         {"two_e_gamma_twin", &b.two_e_gamma_twin},
                                                         {"cbar", &cb}};
  std::ostringstream os;
  switch (c.format) {
    case OutputFormat::json:
      os << json_io::write_constants(b, checks).dump(2) << '\n';
      break;
    case OutputFormat::csv:
      os << "name,lower,upper\n";
      for (const auto& [name, br] : rows) os << name << ',' << br->down.decimal() << ',' << br->up.decimal() << '\n';
      break;
    case OutputFormat::table:
      for (const auto& [name, br] : rows) {
        os << pad(name, 20) << "[" << br->down.decimal() << ", " << br->up.decimal() << "]\n";
      }
      for (const auto& k : checks) os << "check " << pad(k.name, 20) << (k.ok ? "ok  " : "FAIL") << ' ' << k.detail << '\n';
      break;
  }
  a.text = os.str();
  return a;
}

}  // namespace

Command command_from_string(const std::string& s) {
  if (s == "evaluate") return Command::evaluate;
  if (s == "optimize") return Command::optimize;
  if (s == "verify") return Command::verify;
  if (s == "constants") return Command::constants;
  throw UsageError("unknown command '" + s + "'");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::evaluate: return "evaluate";
    case Command::optimize: return "optimize";
    case Command::verify: return "verify";
    case Command::constants: return "constants";
  }
  return "";
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "table") return OutputFormat::table;
  throw UsageError("format must be json, csv or table");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::table: return "table";
  }
  return "";
}

u64 parse_count(const std::string& text) { return as_count(parse_real(text), "'" + text + "'"); }

void read_config(const json& j, RunConfig& c) {
  reject_unknown(j, "", {"command", "precision_digits", "format", "out", "trace_out", "threads", "params",
                         "bracket_form", "target", "sensitivity", "search", "verify"});
  if (j.contains("command")) {
    if (!j.at("command").is_string()) throw UsageError("command: expected a string");
    c.command = command_from_string(j.at("command").get<std::string>());
  }
  if (j.contains("precision_digits")) {
    c.precision_digits = static_cast<int>(read_count(j.at("precision_digits"), "precision_digits"));
  }
  if (j.contains("format")) {
    if (!j.at("format").is_string()) throw UsageError("format: expected a string");
    c.format = format_from_string(j.at("format").get<std::string>());
  }
  auto str_opt = [&](const char* key, std::optional<std::string>& dst) {
    if (!j.contains(key)) return;
    const json& v = j.at(key);
    if (v.is_null()) {
      dst.reset();
    } else if (v.is_string()) {
      dst = v.get<std::string>();
    } else {
      throw UsageError(std::string(key) + ": expected a string");
    }
  };
  str_opt("out", c.out);
  str_opt("trace_out", c.trace_out);
  if (j.contains("threads")) c.threads = static_cast<int>(read_count(j.at("threads"), "threads"));
  if (j.contains("params")) json_io::read_params(j.at("params"), c.params);
  if (j.contains("bracket_form")) {
    if (!j.at("bracket_form").is_string()) throw UsageError("bracket_form: expected a string");
    c.bracket_form = bracket_from_string(j.at("bracket_form").get<std::string>());
  }
  if (j.contains("target")) c.target = json_io::read_real(j.at("target"), "target");
  if (j.contains("sensitivity")) {
    if (!j.at("sensitivity").is_boolean()) throw UsageError("sensitivity: expected a boolean");
    c.sensitivity = j.at("sensitivity").get<bool>();
  }
  if (j.contains("search")) {
    json s = j.at("search");
    if (s.is_object()) {
      c.search_start_given = c.search_start_given || s.contains("start");
      if (s.contains("box") && s.at("box").is_string()) {
        const std::string preset = s.at("box").get<std::string>();
        if (preset != "around" && preset != "degenerate") {
          throw UsageError("search.box: expected \"around\", \"degenerate\" or an object");
        }
        c.search_box_preset = preset;
        c.search_box_given = false;
        s.erase("box");
      } else if (s.contains("box")) {
        c.search_box_given = true;
        c.search_box_preset.clear();
      }
    }
    json_io::read_search(s, c.search);
  }
  if (j.contains("verify")) {
    const json& v = j.at("verify");
    reject_unknown(v, "verify",
                   {"checks", "lo", "hi", "stride", "samples", "x", "ratio", "u_samples", "z_samples", "open_lo"});
    VerifyRequest& r = c.verify;
    if (v.contains("checks")) {
      const json& ch = v.at("checks");
      if (!ch.is_array()) throw UsageError("verify.checks: expected an array");
      r.checks.clear();
      for (const auto& x : ch) {
        if (!x.is_string()) throw UsageError("verify.checks: expected strings");
        r.checks.push_back(x.get<std::string>());
      }
    }
    auto real = [&](const char* key, std::optional<double>& dst) {
      if (v.contains(key)) dst = json_io::read_real(v.at(key), std::string("verify.") + key);
    };
    auto count = [&](const char* key, std::optional<u64>& dst) {
      if (v.contains(key)) dst = read_count(v.at(key), std::string("verify.") + key);
    };
    real("lo", r.lo);
    real("hi", r.hi);
    real("ratio", r.ratio);
    count("stride", r.stride);
    count("samples", r.samples);
    count("x", r.x);
    if (v.contains("u_samples")) r.u_samples = read_counts(v.at("u_samples"), "verify.u_samples");
    if (v.contains("z_samples")) r.z_samples = read_counts(v.at("z_samples"), "verify.z_samples");
    if (v.contains("open_lo")) {
      if (!v.at("open_lo").is_boolean()) throw UsageError("verify.open_lo: expected a boolean");
      r.open_lo = v.at("open_lo").get<bool>();
    }
  }
}

ordered_json write_config(const RunConfig& c) {
  ordered_json j;
  j["command"] = to_string(c.command);
  j["precision_digits"] = c.precision_digits;
  j["format"] = to_string(c.format);
  j["out"] = c.out ? ordered_json(*c.out) : ordered_json(nullptr);
  j["trace_out"] = c.trace_out ? ordered_json(*c.trace_out) : ordered_json(nullptr);
  j["threads"] = c.threads;
  j["params"] = json_io::write_params(c.params);
  j["bracket_form"] = std::string(to_string(c.bracket_form));
  j["target"] = shortest(c.target);
  j["sensitivity"] = c.sensitivity;
  j["search"] = json_io::write_search(c.search);
  ordered_json v;
  v["checks"] = c.verify.checks;
  if (c.verify.lo) v["lo"] = shortest(*c.verify.lo);
  if (c.verify.hi) v["hi"] = shortest(*c.verify.hi);
  if (c.verify.stride) v["stride"] = *c.verify.stride;
  if (c.verify.samples) v["samples"] = *c.verify.samples;
  if (c.verify.x) v["x"] = *c.verify.x;
  if (c.verify.ratio) v["ratio"] = shortest(*c.verify.ratio);
  if (!c.verify.u_samples.empty()) v["u_samples"] = c.verify.u_samples;
  if (!c.verify.z_samples.empty()) v["z_samples"] = c.verify.z_samples;
  v["open_lo"] = c.verify.open_lo;
  j["verify"] = v;
  return j;
}

RunConfig resolved(RunConfig c) {
  if (!c.search_start_given) c.search.start = c.params;
  if (c.search_box_preset == "degenerate") {
    c.search.box = SearchBox::degenerate(c.search.start);
  } else if (!c.search_box_given) {
    c.search.box = SearchBox::around(c.search.start);
  }
  c.search_box_preset.clear();
  c.search.precision_digits = c.precision_digits;
  c.search_start_given = c.search_box_given = true;
  return c;
}

void validate(const RunConfig& c) {
  if (c.precision_digits < 30) throw UsageError("precision_digits must be at least 30");
  if (c.precision_digits > 10000) throw UsageError("precision_digits must be at most 10000");
  if (c.threads < 0) throw UsageError("threads must be non-negative");
  if (c.command == Command::verify) {
    if (c.verify.checks.empty()) throw UsageError("verify needs at least one check id");
    for (const auto& id : c.verify.checks) {
      if (!known_check(id)) throw UsageError("unknown check '" + id + "'");
    }
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig c = resolved(config);
    validate(c);
    if (c.threads > 0) omp_set_num_threads(c.threads);
    PrecisionScope scope(c.precision_digits);
    Artifact a;
    switch (c.command) {
      case Command::evaluate: a = do_evaluate(c); break;
      case Command::optimize: a = do_optimize(c, err); break;
      case Command::verify: a = do_verify(c); break;
      case Command::constants: a = do_constants(c); break;
    }
    emit(c, a.text, out);
    return a.status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
  } catch (const ConditionError& e) {
    err << "condition error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace chenbound::cli
