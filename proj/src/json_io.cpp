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

#include "chenbound/json_io.hpp"

#include <cmath>
#include <initializer_list>

#include "chenbound/errors.hpp"
#include "chenbound/format.hpp"

namespace chenbound::json_io {
namespace {

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw UsageError(path + ": expected an object");
}

void reject_unknown(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw UsageError("unknown key '" + path + "." + k + "'");
  }
}

int read_int(const json& v, const std::string& path) {
  const double d = read_real(v, path);
  if (d != std::floor(d) || std::fabs(d) > 2e9) throw UsageError(path + ": expected an integer");
  return static_cast<int>(d);
}

Scale read_scale(const json& v, const std::string& path) {
  if (v == "linear") return Scale::linear;
  if (v == "log") return Scale::log;
  throw UsageError(path + ": scale must be \"linear\" or \"log\"");
}

const char* scale_name(Scale s) { return s == Scale::log ? "log" : "linear"; }

const char* objective_name(Objective o) {
  return o == Objective::min_threshold ? "min_threshold" : "max_coefficient";
}

ordered_json write_range(const ParamRange& r) {
  return {{"lo", shortest(r.lo)}, {"hi", shortest(r.hi)}, {"scale", scale_name(r.scale)}};
}

std::string opt(const std::optional<double>& v) { return v ? shortest(*v) : ""; }

}  // namespace

double read_real(const json& v, const std::string& path) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return parse_real(v.get<std::string>());
    } catch (const UsageError& e) {
      throw UsageError(path + ": " + e.what());
    }
  }
  throw UsageError(path + ": expected a number");
}

void read_params(const json& j, ChenParams& p, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"t", "u", "alpha1", "alpha2", "alpha3", "A", "epsilon1", "epsilon_override"});
  auto get = [&](const char* key, double& dst) {
    if (j.contains(key)) dst = read_real(j.at(key), path + "." + key);
  };
  get("t", p.loglog_threshold);
  get("u", p.u);
  get("alpha1", p.alpha1);
  get("alpha2", p.alpha2);
  get("alpha3", p.alpha3);
  get("A", p.big_a);
  get("epsilon1", p.epsilon1);
  if (j.contains("epsilon_override")) {
    const json& e = j.at("epsilon_override");
    if (e.is_null()) {
      p.epsilon_override.reset();
    } else {
      p.epsilon_override = read_real(e, path + ".epsilon_override");
    }
  }
}

ordered_json write_params(const ChenParams& p) {
  ordered_json j;
  j["t"] = shortest(p.loglog_threshold);
  j["u"] = shortest(p.u);
  j["alpha1"] = shortest(p.alpha1);
  j["alpha2"] = shortest(p.alpha2);
  j["alpha3"] = shortest(p.alpha3);
  j["A"] = shortest(p.big_a);
  j["epsilon1"] = shortest(p.epsilon1);
  if (p.epsilon_override) j["epsilon_override"] = shortest(*p.epsilon_override);
  return j;
}

void read_search(const json& j, SearchSpec& s, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path,
                 {"objective", "fixed_t", "target_coefficient", "start", "box", "budget",
                  "refinement_rounds", "t_resolution", "precision_digits"});
  if (j.contains("objective")) {
    const json& o = j.at("objective");
    if (o == "min_threshold") {
      s.objective = Objective::min_threshold;
    } else if (o == "max_coefficient") {
      s.objective = Objective::max_coefficient;
    } else {
      throw UsageError(path + ".objective: expected \"min_threshold\" or \"max_coefficient\"");
    }
  }
  if (j.contains("fixed_t")) s.fixed_t = read_real(j.at("fixed_t"), path + ".fixed_t");
  if (j.contains("target_coefficient")) {
    s.target_coefficient = read_real(j.at("target_coefficient"), path + ".target_coefficient");
  }
  if (j.contains("start")) read_params(j.at("start"), s.start, path + ".start");
  if (j.contains("budget")) s.budget = read_int(j.at("budget"), path + ".budget");
  if (j.contains("refinement_rounds")) {
    s.refinement_rounds = read_int(j.at("refinement_rounds"), path + ".refinement_rounds");
  }
  if (j.contains("t_resolution")) s.t_resolution = read_real(j.at("t_resolution"), path + ".t_resolution");
  if (j.contains("precision_digits")) {
    s.precision_digits = read_int(j.at("precision_digits"), path + ".precision_digits");
  }
  if (j.contains("box")) {
    const json& b = j.at("box");
    const std::string bp = path + ".box";
    if (b == "around") {
      s.box = SearchBox::around(s.start);
    } else if (b == "degenerate") {
      s.box = SearchBox::degenerate(s.start);
    } else {
      require_object(b, bp);
      reject_unknown(b, bp, {"t", "u", "alpha1", "alpha2", "alpha3", "A", "epsilon1"});
      for (const auto& [k, v] : b.items()) {
        const std::string rp = bp + "." + k;
        require_object(v, rp);
        reject_unknown(v, rp, {"lo", "hi", "scale"});
        ParamRange& r = s.box.coordinate(k);
        if (v.contains("lo")) r.lo = read_real(v.at("lo"), rp + ".lo");
        if (v.contains("hi")) r.hi = read_real(v.at("hi"), rp + ".hi");
        if (v.contains("scale")) r.scale = read_scale(v.at("scale"), rp + ".scale");
        if (!(r.lo <= r.hi)) throw UsageError(rp + ": lo must not exceed hi");
        if (r.scale == Scale::log && !(r.lo > 0)) throw UsageError(rp + ": log scale needs lo > 0");
      }
    }
  }
  if (s.budget < 1) throw UsageError(path + ".budget must be at least 1");
  if (s.precision_digits < 30) throw UsageError(path + ".precision_digits must be at least 30");
  if (!(s.t_resolution > 0)) throw UsageError(path + ".t_resolution must be positive");
}

ordered_json write_search(const SearchSpec& s) {
  ordered_json j;
  j["objective"] = objective_name(s.objective);
  j["fixed_t"] = shortest(s.fixed_t);
  j["target_coefficient"] = shortest(s.target_coefficient);
  j["start"] = write_params(s.start);
  ordered_json box;
  for (const char* name : {"t", "u", "alpha1", "alpha2", "alpha3", "A", "epsilon1"}) {
    box[name] = write_range(s.box.coordinate(name));
  }
  j["box"] = box;
  j["budget"] = s.budget;
  j["refinement_rounds"] = s.refinement_rounds;
  j["t_resolution"] = shortest(s.t_resolution);
  j["precision_digits"] = s.precision_digits;
  return j;
}

ordered_json write_result(const SearchResult& r, const SearchSpec& s) {
  ordered_json j;
  j["schema_version"] = 1;
  j["objective"] = objective_name(s.objective);
  j["target_coefficient"] = shortest(s.target_coefficient);
  j["feasible"] = r.feasible;
  j["budget_exhausted"] = r.budget_exhausted;
  j["evaluations"] = r.trace.size();
  j["best_params"] = write_params(r.best_params);
  if (r.best_certificate) {
    j["best_certificate"] = ordered_json::parse(r.best_certificate->to_json());
  } else {
    j["best_certificate"] = nullptr;
  }
  ordered_json trace = ordered_json::array();
  for (const auto& e : r.trace) {
    ordered_json row = write_params(e.params);
    row["coefficient"] = e.coefficient ? ordered_json(shortest(*e.coefficient)) : ordered_json(nullptr);
    row["conditions_ok"] = e.conditions_ok;
    row["feasible"] = e.feasible;
    if (!e.reason.empty()) row["reason"] = e.reason;
    trace.push_back(row);
  }
  j["trace"] = trace;
  return j;
}

ordered_json write_report(const VerificationReport& r) {
  ordered_json j;
  j["check_id"] = r.check_id;
  j["range"] = {{"lo", r.range_lo}, {"hi", r.range_hi}};
  j["points_checked"] = r.points_checked;
  ordered_json v = ordered_json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"witness", x.witness}, {"lhs", x.lhs}, {"rhs", x.rhs}, {"margin", shortest(x.margin)}});
  }
  j["violations"] = v;
  j["worst_margin"] = shortest(r.worst_margin);
  j["worst_witness"] = r.worst_witness;
  j["informational"] = r.informational;
  j["passed"] = r.passed();
  j["notes"] = r.notes;
  return j;
}

ordered_json write_constants(const ConstantsBundle& b, const std::vector<ConstantCheck>& checks) {
  auto br = [](const Bracket& x) {
    return ordered_json{{"lower", x.down.decimal()}, {"upper", x.up.decimal()}};
  };
  ordered_json j;
  j["precision_digits"] = b.precision_digits;
  j["gamma"] = br(b.gamma);
  j["mertens_M"] = br(b.mertens_m);
  j["twin_prime_product"] = br(b.twin_prime_product);
  j["two_e_gamma_twin"] = br(b.two_e_gamma_twin);
  j["cbar"] = br(cbar(b.precision_digits));
  ordered_json c = ordered_json::array();
  for (const auto& k : checks) c.push_back({{"name", k.name}, {"ok", k.ok}, {"detail", k.detail}});
  j["checks"] = c;
  return j;
}

ordered_json write_sensitivity(const std::vector<SensitivityRow>& rows) {
  ordered_json a = ordered_json::array();
  for (const auto& r : rows) {
    a.push_back({{"parameter", r.parameter},
                 {"minus_value", shortest(r.minus_value)},
                 {"plus_value", shortest(r.plus_value)},
                 {"coefficient_minus", opt(r.coefficient_minus)},
                 {"coefficient_center", shortest(r.coefficient_center)},
                 {"coefficient_plus", opt(r.coefficient_plus)},
                 {"relative_minus", opt(r.relative_minus)},
                 {"relative_plus", opt(r.relative_plus)},
                 {"conditions_minus", r.conditions_minus},
                 {"conditions_plus", r.conditions_plus}});
  }
  return a;
}

json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(source + ": " + e.what());
  }
}

}  // namespace chenbound::json_io
