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

#include <optional>
#include <string>
#include <vector>

#include "chenbound/theorem_engine.hpp"

namespace chenbound {

enum class Scale { linear, log };
enum class Objective { min_threshold, max_coefficient };

struct ParamRange {
  double lo = 0;
  double hi = 0;
  Scale scale = Scale::linear;
  bool fixed() const { return lo == hi; }
};

// Coordinate order used by the search and the trace.
inline constexpr const char* kSearchCoordinates[] = {"u", "alpha1", "alpha2", "alpha3", "A",
                                                     "epsilon1"};

struct SearchBox {
  ParamRange t{15.0, 15.85, Scale::linear};
  ParamRange u{1e4, 1e5, Scale::log};
  ParamRange alpha1{1e-3, 1e-2, Scale::log};
  ParamRange alpha2{1e-3, 1e-2, Scale::log};
  ParamRange alpha3{1e-3, 1e-2, Scale::log};
  ParamRange big_a{2, 6, Scale::linear};
  ParamRange epsilon1{1e-30, 1e-10, Scale::log};

  ParamRange& coordinate(std::string_view name);
  const ParamRange& coordinate(std::string_view name) const;
  // Every range collapsed onto the given point.
  static SearchBox degenerate(const ChenParams& p);
  static SearchBox around(const ChenParams& p);
};

struct SearchSpec {
  Objective objective = Objective::min_threshold;
  double fixed_t = 15.85;  // for max_coefficient
  double target_coefficient = 4e-4;
  SearchBox box;
  ChenParams start;  // inner searches begin here, clamped to the box
  int budget = 2000;
  int refinement_rounds = 4;
  double t_resolution = 1e-3;
  int precision_digits = 40;
};

struct TraceEntry {
  ChenParams params;
  std::optional<double> coefficient;  // down-rounded, when evaluable
  bool conditions_ok = false;
  bool feasible = false;
  std::string reason;  // empty when feasible
};

struct SearchResult {
  bool feasible = false;
  bool budget_exhausted = false;
  ChenParams best_params;
  std::optional<BoundCertificate> best_certificate;
  std::vector<TraceEntry> trace;
};

struct Feasibility {
  bool ok = false;
  BoundCertificate certificate;
};
Feasibility feasible(const ChenParams& p, double target, int digits = default_digits());

SearchResult minimize_threshold(const SearchSpec& spec);
SearchResult maximize_coefficient(const SearchSpec& spec);
SearchResult optimize(const SearchSpec& spec);

// Columns: t,u,alpha1,alpha2,alpha3,A,eps1,coefficient,feasible
std::string trace_csv(const SearchResult& r);

struct SensitivitySpec {
  double linear_relative = 0.01;  // x (1 +- d) for t, alphas, A
  double log_decades = 0.5;       // x 10^(+-d) for u and epsilon1
  int precision_digits = 40;
};
struct SensitivityRow {
  std::string parameter;
  double minus_value = 0;
  double plus_value = 0;
  std::optional<double> coefficient_minus;
  double coefficient_center = 0;
  std::optional<double> coefficient_plus;
  // Relative change of the coefficient; absent when a side is not evaluable.
  std::optional<double> relative_minus;
  std::optional<double> relative_plus;
  bool conditions_minus = false;
  bool conditions_plus = false;
};
std::vector<SensitivityRow> sensitivity(const ChenParams& center, const SensitivitySpec& spec = {});

}  // namespace chenbound
