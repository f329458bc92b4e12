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
#include <string_view>
#include <vector>

#include "chenbound/rigorous.hpp"

namespace chenbound {

// X2 = exp(exp(t)); every N-dependent factor is evaluated at N = X2.
struct ChenParams {
  double loglog_threshold = 15.85;
  double u = 0;
  double alpha1 = 0;
  double alpha2 = 0;
  double alpha3 = 0;
  double big_a = 4;
  double epsilon1 = 1e-20;
  // Replaces epsilon(u) by a larger value when set; must stay below 1/63.
  std::optional<double> epsilon_override;
};

struct DerivedParams {
  Interval epsilon;
  int c1 = 0;
  int c2 = 0;
  int table_row = 0;
};

ChenParams paper_params();
// Accepts plain decimals and "10^x".
double parse_real(std::string_view text);
// Throws UsageError naming the first parameter outside its admissible range.
void validate_ranges(const ChenParams& p);
// epsilon from u (or the override) and the matching sieve table row.
DerivedParams derive(const ChenParams& p, mpfr_prec_t bits = default_bits());

// Which right-hand bracket is used for the S(B) main term.
enum class BracketForm { statement, proof };
BracketForm default_bracket_form();
std::string_view to_string(BracketForm f);

struct Condition {
  std::string id;
  std::string scope;  // common, A, Aq or B
  std::string description;
  bool satisfied = false;
  // Signed; log-space for growth conditions. Lower end of the enclosure.
  double margin = 0;
};
std::vector<Condition> check_conditions(const ChenParams& p, int digits = default_digits());
bool all_satisfied(const std::vector<Condition>& c, std::string_view scope = {});

struct NamedValue {
  std::string label;
  Interval value;
  Direction direction;
  std::string ref;
};

struct BoundCertificate {
  ChenParams params;
  int precision_digits = 0;
  BracketForm bracket_form = BracketForm::statement;
  std::optional<DerivedParams> derived;
  std::vector<Condition> conditions;
  std::vector<NamedValue> values;
  std::optional<Interval> final_coefficient;
  std::string failure;  // why the coefficient is missing, if it is

  bool conditions_ok() const;
  // Conditions hold and the down-rounded coefficient is positive.
  bool positive() const;
  bool feasible(double target) const;
  DirectedReal final_down() const;
  const NamedValue* find(std::string_view label) const;
  std::string to_json(int indent = 2) const;
};

// Coefficients of U_N N / log^2 N; throw ConditionError when the scope's
// hypotheses fail.
Interval lower_s_a(const ChenParams& p, int digits = default_digits());
Interval upper_sum_s_aq(const ChenParams& p, int digits = default_digits());
Interval upper_s_b(const ChenParams& p, int digits = default_digits(),
                   BracketForm form = default_bracket_form());

// Never throws on failed hypotheses; the certificate records them.
BoundCertificate chen_coefficient(const ChenParams& p, int digits = default_digits(),
                                  BracketForm form = default_bracket_form());
void require_valid(const BoundCertificate& c);

// coefficient * U * X2 / log^2 X2 - sqrt(X2) - 1 with log X2 = L.
Interval corollary_margin_log(const Interval& coefficient, const Interval& u_lower, const Interval& L);
Interval corollary_margin_direct(const Interval& coefficient, const Interval& u_lower,
                                 const Interval& L);
// Needs a positive, condition-clean certificate.
DirectedReal corollary_margin(const BoundCertificate& c);
DirectedReal corollary_margin(const ChenParams& p, int digits = default_digits());

}  // namespace chenbound
