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

#include "chenbound/theorem_engine.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "chenbound/analytic_constants.hpp"
#include "chenbound/errors.hpp"
#include "chenbound/format.hpp"
#include "chenbound/lemma_bounds.hpp"

namespace chenbound {
namespace {

using Sink = std::vector<NamedValue>;

Interval dec(const char* text) { return Interval::decimal(text); }

Interval pt(double v) { return Interval::point(v); }

void put(Sink* sink, const char* label, const Interval& v, Direction d, const char* ref) {
  if (sink) sink->push_back({label, v, d, ref});
}

// Quantities shared by the three sifted-set bounds.
struct Context {
  Interval t, L, K, eg, eps;
  int c1 = 0, c2 = 0;
  Interval a1, a2, a3, big_a, e1, log1p_e1;
  Interval d8, d3, e2;

  Context(const ChenParams& p, int digits) {
    t = pt(p.loglog_threshold);
    L = exp(t);
    const auto& k = constants(digits);
    K = k.two_e_gamma_twin.interval();
    eg = exp(k.gamma.interval());
    const DerivedParams d = derive(p);
    eps = d.epsilon;
    c1 = d.c1;
    c2 = d.c2;
    a1 = pt(p.alpha1);
    a2 = pt(p.alpha2);
    a3 = pt(p.alpha3);
    big_a = pt(p.big_a);
    e1 = pt(p.epsilon1);
    log1p_e1 = log1p(e1);
    d8 = v_envelope_log(VExponent::eighth, L, Side::lower).relative_error;
    d3 = v_envelope_log(VExponent::third, L, Side::upper).relative_error;
    e2 = exp(Interval::integer(2));
  }

  // log^x N for real x.
  Interval log_pow(const Interval& x) const { return exp(x * t); }
};

Interval eval_a(const Context& c, Sink* sink) {
  const Interval s = 4 - 8 * c.a1;
  const Interval main = small_f(s);
  const Interval penalty = c.eps * c.c2 * c.e2 * h(s);
  const Interval cg = c_g_log(c.L);
  const Interval error = cg / (8 * (1 - c.d8) * c.K * c.log_pow(c.big_a - 2));
  const Interval g = 8 * (1 - c.d8) * (main - penalty - error);
  put(sink, "s", s, Direction::nearest, "sieve level log D / log z for A");
  put(sink, "f(s)", main, Direction::down, "linear sieve lower function");
  put(sink, "penalty_A", penalty, Direction::up, "epsilon C2 e^2 h(s)");
  put(sink, "c_G(X2)", cg, Direction::up, "remainder coefficient for primes in progressions");
  put(sink, "error_A", error, Direction::up, "remainder sum for A over log^(A-2) N");
  put(sink, "G_A", g, Direction::down, "lower bound for S(A,P,z)");
  return g;
}

Interval eval_aq(const Context& c, Sink* sink) {
  const Interval k = 8 * (Interval::rational(1, 6) - c.a2);
  const Interval hk = h(k);
  const Interval L2 = square(c.L);
  const Interval half = Interval::rational(1, 2);
  const Interval ratio = log(Interval::integer(6)) + log((3 - 8 * c.a2) / (3 - 18 * c.a2));
  const Interval mertens_factor = log(Interval::rational(8, 3)) + 64 / L2;
  const Interval ec1 = c.eps * c.c1 * c.e2 * hk;
  const Interval x8 = -1 / expm1(-c.L / 8);  // X^{1/8} / (X^{1/8} - 1)
  const Interval cg = c_g_log(c.L);
  const Interval l1 = (1 + dec("3e-7")) * (1 + c.d8) * x8 *
                      (c.eg / 4 * (ratio / (half - c.a2) + 512 / (k * L2)) + mertens_factor * ec1);
  const Interval l2 = cg / 8 * (dec("0.55") + 1 / c.L) / c.K;
  const Interval l3 = (1 + c.d8) * (2 * c.eg / k + ec1) * cg;
  const Interval g = 8 * (l1 + l2 / c.log_pow(c.big_a - 3) + l3 / c.log_pow(c.big_a - 1));
  put(sink, "k_alpha2", k, Direction::nearest, "8 (1/6 - alpha2)");
  put(sink, "s_q_min", k, Direction::nearest, "sieve level for q near y");
  put(sink, "s_q_max", 3 - 8 * c.a2, Direction::nearest, "sieve level for q near z");
  put(sink, "h(k_alpha2)", hk, Direction::up, "linear sieve error profile");
  put(sink, "l1", l1, Direction::up, "main part of the A_q sum");
  put(sink, "l2", l2, Direction::up, "remainder part of the A_q sum");
  put(sink, "l3", l3, Direction::up, "secondary remainder of the A_q sum");
  put(sink, "G_q", g, Direction::up, "upper bound for the sum of S(A_q,P,z)");
  return g;
}

Interval eval_b(const Context& c, BracketForm form, Sink* sink) {
  const mpfr_prec_t b = default_bits();
  const Interval L2 = square(c.L);
  const Interval log_y = c.L / 3;
  const Interval li_y = li_interval(exp(log_y), b);
  const Interval ell =
      log_y * (li_y - exp(log_y / 2) * log_y / (8 * Interval::pi())) / exp(log_y);
  const Interval cb = cbar_interval(b);
  const Interval mertens_factor = log(Interval::rational(8, 3)) + 64 / L2;
  Interval bracket;
  if (form == BracketForm::statement) {
    bracket = cb + 64 * log(Interval::rational(26, 21)) / L2 +
              mertens_factor * (3 * c.log1p_e1 / c.L + 27 / L2);
  } else {
    bracket = cb + 36 / L2 + mertens_factor * (10 * c.log1p_e1 / c.L + 27 / L2);
  }
  const Interval lead = (1 + c.d3) * (2 * c.eg / (Interval::rational(1, 2) - c.a3) + 3 * c.eps * c.c1);
  const Interval main = lead * (1 + c.e1) * ell * bracket;
  const Interval log_big_y = c.log1p_e1 + c.L / 8;
  const Interval log_dstar = c.L / 2 - (c.big_a + 1) * c.t;
  const Interval m = m_bilinear_log(2 * c.L / 3, log_big_y, log_dstar);
  const Interval scale = exp(-c.L / 48) * (1 + c.e1) * pow(c.L, 5) / (c.log1p_e1 * c.K);
  const Interval r = scale * (dec("0.046") * m * exp(-c.log1p_e1 / 6) +
                              dec("0.159") * exp(-5 * c.L / 48));
  const Interval g = main + r;
  put(sink, "ell(y)", ell, Direction::up, "log y (li(y) - sqrt(y) log y / (8 pi)) / y");
  put(sink, "cbar", cb, Direction::up, "integral of log(2 - 3b) / (b (1 - b)) over [1/8, 1/3]");
  put(sink, "B_bracket", bracket, Direction::up,
      form == BracketForm::statement ? "bracket as displayed in the S(B) bound"
                                     : "bracket as derived in the counting lemma for B");
  put(sink, "B_main", main, Direction::up, "main term of S(B,P,y)");
  put(sink, "m", m, Direction::up, "bilinear coefficient m(N^(2/3), (1+eps1) N^(1/8), D*)");
  put(sink, "R_term", r, Direction::up, "remainder of S(B,P,y)");
  put(sink, "G_B", g, Direction::up, "upper bound for S(B,P,y)");
  return g;
}

Interval eval_tail(const Context& c, Sink* sink) {
  const Interval tail = (2 * exp(-c.L / 8) + exp(-2 * c.L / 3)) * square(c.L) / c.K;
  put(sink, "tail", tail, Direction::up, "2 N^(7/8) + N^(1/3) on the coefficient scale");
  return tail;
}

Condition make(std::string id, std::string scope, std::string desc, const Interval& margin,
               bool strict) {
  Condition c{std::move(id), std::move(scope), std::move(desc), false, margin.lower_double()};
  c.satisfied = strict ? margin.certainly_positive() : margin.certainly_nonnegative();
  return c;
}

Condition failed(std::string id, std::string scope, std::string desc) {
  return {std::move(id), std::move(scope), std::move(desc), false,
          -std::numeric_limits<double>::infinity()};
}

std::string failing_ids(const std::vector<Condition>& cs, std::string_view scope) {
  std::string out;
  for (const auto& c : cs) {
    if (c.satisfied || !(c.scope == "common" || scope.empty() || c.scope == scope)) continue;
    if (!out.empty()) out += ", ";
    out += c.id;
  }
  return out;
}

void require_scope(const std::vector<Condition>& cs, std::string_view scope) {
  if (!all_satisfied(cs, scope)) {
    throw ConditionError("hypotheses fail: " + failing_ids(cs, scope));
  }
}

}  // namespace

ChenParams paper_params() {
  ChenParams p;
  p.loglog_threshold = 15.85;
  p.u = parse_real("10^4.27");
  p.alpha1 = p.alpha2 = p.alpha3 = parse_real("10^-2.61");
  p.big_a = 4;
  p.epsilon1 = 1e-20;
  return p;
}

double parse_real(std::string_view text) {
  std::string s(text);
  auto bad = [&]() { return UsageError("cannot parse number '" + s + "'"); };
  if (s.empty()) throw bad();
  const auto caret = s.find('^');
  if (caret == std::string::npos) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != s.size()) throw bad();
    return v;
  }
  const double base = parse_real(s.substr(0, caret));
  const std::string ex = s.substr(caret + 1);
  BigFloat e(128), r(128);
  char* end = nullptr;
  mpfr_strtofr(e.raw(), ex.c_str(), &end, 10, MPFR_RNDN);
  if (ex.empty() || end != ex.c_str() + ex.size()) throw bad();
  BigFloat bb(128);
  mpfr_set_d(bb.raw(), base, MPFR_RNDN);
  mpfr_pow(r.raw(), bb.raw(), e.raw(), MPFR_RNDN);
  return r.to_double(MPFR_RNDN);
}

void validate_ranges(const ChenParams& p) {
  auto check = [](bool ok, const char* msg) {
    if (!ok) throw UsageError(msg);
  };
  check(std::isfinite(p.loglog_threshold) && p.loglog_threshold > 0, "t out of range (0, inf)");
  check(p.u > 1, "u out of range (1, 1e18]");
  check(p.u <= 1e18, "u out of range (1, 1e18]");
  check(p.alpha1 > 0 && p.alpha1 < 0.125, "alpha1 out of range (0, 1/8)");
  check(p.alpha2 > 0 && p.alpha2 < 1.0 / 24, "alpha2 out of range (0, 1/24)");
  check(p.alpha3 >= 0 && p.alpha3 < 0.0625, "alpha3 out of range [0, 1/16)");
  check(std::isfinite(p.big_a), "A must be finite");
  check(p.epsilon1 > 0 && p.epsilon1 < 1, "epsilon1 out of range (0, 1)");
  if (p.epsilon_override) {
    check(*p.epsilon_override > 0 && *p.epsilon_override < 1.0 / 63,
          "epsilon out of range (0, 1/63)");
  }
}

DerivedParams derive(const ChenParams& p, mpfr_prec_t bits) {
  DerivedParams d;
  const Interval eps_u = epsilon_of_u(Interval::point(p.u, bits));
  d.epsilon = eps_u;
  if (p.epsilon_override) {
    const Interval o = Interval::point(*p.epsilon_override, bits);
    if (!o.certainly_ge(eps_u)) throw ConditionError("epsilon override below epsilon(u)");
    d.epsilon = o;
  }
  const SieveConstants sc = sieve_constants(d.epsilon);
  d.c1 = sc.c1;
  d.c2 = sc.c2;
  d.table_row = sc.row_inv_epsilon;
  return d;
}

BracketForm default_bracket_form() {
#ifdef CHENBOUND_BOVER_PROOF_FORM
  return BracketForm::proof;
#else
  return BracketForm::statement;
#endif
}

std::string_view to_string(BracketForm f) {
  return f == BracketForm::statement ? "statement" : "proof";
}

std::vector<Condition> check_conditions(const ChenParams& p, int digits) {
  PrecisionScope scope(digits);
  std::vector<Condition> out;
  const Interval t = pt(p.loglog_threshold);
  const Interval L = exp(t);
  const Interval u = pt(p.u);
  const Interval big_a = pt(p.big_a);
  const Interval a_plus = (big_a + 1) * t;  // log log^{A+1} X2

  out.push_back(make("u_at_least_9551", "common", "u >= 9551", log(u) - log(Interval::integer(9551)),
                     false));
  out.push_back(make("u_at_most_1e18", "common", "u <= 10^18", log(dec("1e18")) - log(u), false));
  if (p.u >= 9551) {
    const Interval eps_u = epsilon_of_u(u);
    Interval eps = eps_u;
    if (p.epsilon_override) {
      const Interval o = pt(*p.epsilon_override);
      out.push_back(make("epsilon_override_dominates", "common", "epsilon override >= epsilon(u)",
                         o - eps_u, false));
      eps = o;
    }
    out.push_back(make("epsilon_below_1_63", "common", "epsilon < 1/63",
                       -log(Interval::integer(63)) - log(Interval::bounds(eps.hi(), eps.hi())),
                       true));
  } else {
    out.push_back(failed("epsilon_below_1_63", "common", "epsilon < 1/63"));
  }
  out.push_back(make("x2_at_least_4e18", "common", "X2 >= 4e18", L - log_four_e18(), false));
  out.push_back(make("a_at_least_minus_1", "common", "A >= -1", big_a + 1, false));

  auto range = [&](const char* id, const char* scope, const char* desc, double v, std::int64_t den,
                   bool closed_below) {
    const Interval x = pt(v);
    const Interval upper = Interval::rational(1, den) - x;
    Condition c{id, scope, desc, false, min(x, upper).lower_double()};
    c.satisfied = upper.certainly_positive() &&
                  (closed_below ? x.certainly_nonnegative() : x.certainly_positive());
    out.push_back(c);
  };
  auto power = [&](const char* id, const char* scope, const char* desc, double alpha) {
    out.push_back(make(id, scope, desc, pt(alpha) * L - a_plus - u, false));
  };

  range("alpha1_range", "A", "0 < alpha1 < 1/8", p.alpha1, 8, false);
  power("alpha1_power", "A", "N^alpha1 / log^(A+1) N >= exp(u)", p.alpha1);
  out.push_back(make("s_a_level", "A", "sqrt(X2) / log^(A+1) X2 >= 45",
                     L / 2 - a_plus - log(Interval::integer(45)), false));

  range("alpha2_range", "Aq", "0 < alpha2 < 1/24", p.alpha2, 24, false);
  power("alpha2_power", "Aq", "N^alpha2 / log^(A+1) N >= exp(u)", p.alpha2);
  out.push_back(make("s_aq_level", "Aq", "sqrt(X2) / log^(A+1) X2 >= 10^9",
                     L / 2 - a_plus - log(dec("1e9")), false));
  out.push_back(make("t_at_least_15", "Aq", "X2 >= exp(exp(15))", t - 15, false));

  range("alpha3_range", "B", "0 <= alpha3 < 1/16", p.alpha3, 16, true);
  power("alpha3_power", "B", "N^alpha3 / log^(A+1) N >= exp(u)", p.alpha3);
  out.push_back(make("s_b_level", "B", "sqrt(X2) / log^(A+1) X2 >= 10^9",
                     L / 2 - a_plus - log(dec("1e9")), false));
  {
    const Interval e1 = pt(p.epsilon1);
    Condition c{"epsilon1_range", "B", "0 < epsilon1 < 1", false, min(e1, 1 - e1).lower_double()};
    c.satisfied = e1.certainly_positive() && (1 - e1).certainly_positive();
    out.push_back(c);
  }
  out.push_back(make("y_at_least_2657", "B", "y = N^(1/3) >= 2657",
                     L / 3 - log(Interval::integer(2657)), false));
  if (!(p.epsilon1 > 0)) {
    out.push_back(failed("bilinear_y_range", "B", "Y = (1+eps1) N^(1/8) >= 4e18"));
    out.push_back(failed("bilinear_side", "B", "side condition of the bilinear bound at Z = N^(1/8)"));
  } else {
    const Interval log_y = log1p(pt(p.epsilon1)) + L / 8;
    const Interval log_d = L / 2 - a_plus;
    out.push_back(make("bilinear_y_range", "B", "Y = (1+eps1) N^(1/8) >= 4e18",
                       log_y - log_four_e18(), false));
    if (out.back().satisfied && log_d.certainly_gt(0.0)) {
      out.push_back(make("bilinear_side", "B", "side condition of the bilinear bound at Z = N^(1/8)",
                         bilinear_side_margin(log_y, log_d, L / 8), false));
    } else {
      out.push_back(failed("bilinear_side", "B", "side condition of the bilinear bound at Z = N^(1/8)"));
    }
  }
  return out;
}

bool all_satisfied(const std::vector<Condition>& cs, std::string_view scope) {
  for (const auto& c : cs) {
    if (!(scope.empty() || c.scope == "common" || c.scope == scope)) continue;
    if (!c.satisfied) return false;
  }
  return true;
}

bool BoundCertificate::conditions_ok() const { return all_satisfied(conditions); }

bool BoundCertificate::positive() const {
  return conditions_ok() && final_coefficient && final_coefficient->certainly_positive();
}

bool BoundCertificate::feasible(double target) const {
  return conditions_ok() && final_coefficient && final_coefficient->certainly_ge(target);
}

DirectedReal BoundCertificate::final_down() const {
  if (!final_coefficient) throw ConditionError("certificate has no coefficient: " + failure);
  return final_coefficient->as(Direction::down, precision_digits);
}

const NamedValue* BoundCertificate::find(std::string_view label) const {
  for (const auto& v : values) {
    if (v.label == label) return &v;
  }
  return nullptr;
}

std::string BoundCertificate::to_json(int indent) const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema_version"] = 1;
  ordered_json pj;
  pj["t"] = shortest(params.loglog_threshold);
  pj["u"] = shortest(params.u);
  pj["alpha1"] = shortest(params.alpha1);
  pj["alpha2"] = shortest(params.alpha2);
  pj["alpha3"] = shortest(params.alpha3);
  pj["A"] = shortest(params.big_a);
  pj["epsilon1"] = shortest(params.epsilon1);
  if (params.epsilon_override) pj["epsilon_override"] = shortest(*params.epsilon_override);
  if (derived) {
    pj["derived"] = {{"epsilon", derived->epsilon.as(Direction::up, precision_digits).decimal()},
                     {"C1", derived->c1},
                     {"C2", derived->c2},
                     {"table_row_inv_epsilon", derived->table_row},
                     {"z_exp", "1/8"},
                     {"y_exp", "1/3"}};
  }
  doc["params"] = pj;
  doc["precision_digits"] = precision_digits;
  doc["bracket_form"] = std::string(to_string(bracket_form));
  ordered_json conds = ordered_json::array();
  for (const auto& c : conditions) {
    conds.push_back({{"id", c.id},
                     {"scope", c.scope},
                     {"description", c.description},
                     {"satisfied", c.satisfied},
                     {"margin", shortest(c.margin)}});
  }
  doc["conditions"] = conds;
  ordered_json vals = ordered_json::object();
  for (const auto& v : values) {
    vals[v.label] = {{"decimal", v.value.as(v.direction, precision_digits).decimal()},
                     {"direction", std::string(chenbound::to_string(v.direction))},
                     {"ref", v.ref}};
  }
  doc["values"] = vals;
  if (final_coefficient) {
    doc["final"] = {{"decimal", final_down().decimal()}, {"direction", "down"}};
  } else {
    doc["final"] = nullptr;
    doc["failure"] = failure;
  }
  doc["feasible"] = positive();
  ordered_json notes = ordered_json::array();
  notes.push_back(bracket_form == BracketForm::statement
                      ? "S(B) bracket uses 64 log(26/21)/log^2 N and 3 log(1+eps1)/log N as displayed; "
                        "the counting lemma derives 36/log^2 N and 10 log(1+eps1)/log N"
                      : "S(B) bracket uses the counting lemma's 36/log^2 N and 10 log(1+eps1)/log N "
                        "instead of the displayed 64 log(26/21)/log^2 N and 3 log(1+eps1)/log N");
  notes.push_back("l3 uses k_alpha2");
  doc["notes"] = notes;
  return doc.dump(indent);
}

Interval lower_s_a(const ChenParams& p, int digits) {
  require_scope(check_conditions(p, digits), "A");
  PrecisionScope scope(digits);
  return eval_a(Context(p, digits), nullptr);
}

Interval upper_sum_s_aq(const ChenParams& p, int digits) {
  require_scope(check_conditions(p, digits), "Aq");
  PrecisionScope scope(digits);
  return eval_aq(Context(p, digits), nullptr);
}

Interval upper_s_b(const ChenParams& p, int digits, BracketForm form) {
  require_scope(check_conditions(p, digits), "B");
  PrecisionScope scope(digits);
  return eval_b(Context(p, digits), form, nullptr);
}

BoundCertificate chen_coefficient(const ChenParams& p, int digits, BracketForm form) {
  BoundCertificate cert;
  cert.params = p;
  cert.precision_digits = digits;
  cert.bracket_form = form;
  cert.conditions = check_conditions(p, digits);
  PrecisionScope scope(digits);
  try {
    cert.derived = derive(p);
    const Context c(p, digits);
    Sink* sink = &cert.values;
    put(sink, "t", c.t, Direction::nearest, "X2 = exp(exp(t))");
    put(sink, "log_X2", c.L, Direction::nearest, "log X2");
    put(sink, "epsilon", c.eps, Direction::up, "linear sieve epsilon from u");
    put(sink, "C1", Interval::integer(c.c1), Direction::nearest, "sieve table");
    put(sink, "C2", Interval::integer(c.c2), Direction::nearest, "sieve table");
    put(sink, "U_N_lower", c.K, Direction::down, "2 e^gamma prod_{p>2} (1 - 1/(p-1)^2)");
    put(sink, "delta_8", c.d8, Direction::up, "0.62 log N / N^(1/16)");
    put(sink, "delta_3", c.d3, Direction::up, "0.06 log N / N^(1/6)");
    const Interval ga = eval_a(c, sink);
    const Interval gq = eval_aq(c, sink);
    const Interval gb = eval_b(c, form, sink);
    const Interval tail = eval_tail(c, sink);
    const Interval final_c = ga - gq / 2 - gb / 2 - tail;
    put(sink, "final", final_c, Direction::down, "coefficient of U_N N / log^2 N");
    cert.final_coefficient = final_c;
  } catch (const std::exception& e) {
    cert.failure = e.what();
  }
  return cert;
}

void require_valid(const BoundCertificate& c) {
  if (!c.conditions_ok()) throw ConditionError("hypotheses fail: " + failing_ids(c.conditions, {}));
  if (!c.final_coefficient) throw ConditionError("no coefficient: " + c.failure);
  if (!c.positive()) throw ConditionError("coefficient is not positive");
}

Interval corollary_margin_log(const Interval& coef, const Interval& u_lower, const Interval& L) {
  if (!coef.certainly_positive()) {
    throw DomainError("log-space margin needs a positive coefficient");
  }
  const Interval la = log(coef) + log(u_lower) + L - 2 * log(L);
  const Interval lb = L / 2 + log1p(exp(-L / 2));
  return exp(la) * -expm1(lb - la);
}

Interval corollary_margin_direct(const Interval& coef, const Interval& u_lower, const Interval& L) {
  return coef * u_lower * exp(L) / square(L) - exp(L / 2) - 1;
}

DirectedReal corollary_margin(const BoundCertificate& c) {
  require_valid(c);
  PrecisionScope scope(c.precision_digits);
  const Interval L = exp(pt(c.params.loglog_threshold));
  const Interval k = constants(c.precision_digits).two_e_gamma_twin.interval();
  return corollary_margin_log(*c.final_coefficient, k, L).as(Direction::down, c.precision_digits);
}

DirectedReal corollary_margin(const ChenParams& p, int digits) {
  return corollary_margin(chen_coefficient(p, digits));
}

}  // namespace chenbound
