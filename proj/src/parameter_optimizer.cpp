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

#include "chenbound/parameter_optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "chenbound/errors.hpp"
#include "chenbound/format.hpp"

namespace chenbound {
namespace {

double& field(ChenParams& p, std::string_view name) {
  if (name == "t") return p.loglog_threshold;
  if (name == "u") return p.u;
  if (name == "alpha1") return p.alpha1;
  if (name == "alpha2") return p.alpha2;
  if (name == "alpha3") return p.alpha3;
  if (name == "A") return p.big_a;
  if (name == "epsilon1") return p.epsilon1;
  throw UsageError("unknown parameter '" + std::string(name) + "'");
}

double to_unit(double x, const ParamRange& r) {
  if (r.fixed()) return 0;
  if (r.scale == Scale::log) return (std::log(x) - std::log(r.lo)) / (std::log(r.hi) - std::log(r.lo));
  return (x - r.lo) / (r.hi - r.lo);
}

double from_unit(double v, const ParamRange& r) {
  if (r.fixed()) return r.lo;
  if (v <= 0) return r.lo;
  if (v >= 1) return r.hi;
  if (r.scale == Scale::log) return std::exp(std::log(r.lo) + v * (std::log(r.hi) - std::log(r.lo)));
  return r.lo + v * (r.hi - r.lo);
}

double clamp_to(double x, const ParamRange& r) { return std::clamp(x, r.lo, r.hi); }

struct Evaluated {
  BoundCertificate cert;
  double merit = 0;
};

// Feasible points rank by coefficient; the rest by total condition shortfall.
double merit_of(const BoundCertificate& c) {
  double shortfall = 0;
  for (const auto& k : c.conditions) {
    if (k.satisfied) continue;
    shortfall += std::isfinite(k.margin) ? std::max(-k.margin, 1e-12) : 1e9;
  }
  if (!c.final_coefficient) return -1e12 - shortfall;
  if (shortfall > 0) return -1e6 - shortfall;
  return c.final_coefficient->lower_double();
}

TraceEntry entry_of(const BoundCertificate& c, double target) {
  TraceEntry e;
  e.params = c.params;
  e.conditions_ok = c.conditions_ok();
  if (c.final_coefficient) e.coefficient = c.final_coefficient->lower_double();
  e.feasible = c.feasible(target);
  if (!e.feasible) {
    if (!c.final_coefficient) {
      e.reason = "not evaluable: " + c.failure;
    } else if (!e.conditions_ok) {
      std::string ids;
      for (const auto& k : c.conditions) {
        if (k.satisfied) continue;
        if (!ids.empty()) ids += ";";
        ids += k.id;
      }
      e.reason = "conditions: " + ids;
    } else {
      e.reason = "coefficient below target";
    }
  }
  return e;
}

class Search {
 public:
  Search(const SearchSpec& spec, SearchResult& out) : spec_(spec), out_(out) {}

  bool exhausted() const { return static_cast<int>(out_.trace.size()) >= spec_.budget; }

  // Evaluates the batch concurrently; the trace keeps batch order.
  std::vector<Evaluated> run(const std::vector<ChenParams>& batch) {
    std::vector<Evaluated> res(batch.size());
    const int n = static_cast<int>(batch.size());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      res[i].cert = chen_coefficient(batch[i], spec_.precision_digits);
      res[i].merit = merit_of(res[i].cert);
    }
    for (const auto& r : res) out_.trace.push_back(entry_of(r.cert, spec_.target_coefficient));
    return res;
  }

  // Round-robin coordinate descent at fixed t with geometric step shrinking.
  Evaluated inner(const ChenParams& from, double t) {
    ChenParams cur = from;
    cur.loglog_threshold = t;
    for (const char* name : kSearchCoordinates) {
      field(cur, name) = clamp_to(field(cur, name), spec_.box.coordinate(name));
    }
    if (exhausted()) {
      out_.budget_exhausted = true;
      return {chen_coefficient(cur, spec_.precision_digits), -1e18};
    }
    Evaluated best = run({cur}).front();
    double step = 0.25;
    for (int round = 0; round < spec_.refinement_rounds; ++round, step /= 2) {
      for (const char* name : kSearchCoordinates) {
        const ParamRange& r = spec_.box.coordinate(name);
        if (r.fixed()) continue;
        const double here = to_unit(field(best.cert.params, name), r);
        std::vector<ChenParams> batch;
        for (double v : {here - step, here + step}) {
          const double x = from_unit(std::clamp(v, 0.0, 1.0), r);
          if (x == field(best.cert.params, name)) continue;
          ChenParams c = best.cert.params;
          field(c, name) = x;
          batch.push_back(c);
        }
        if (batch.empty()) continue;
        if (static_cast<int>(out_.trace.size() + batch.size()) > spec_.budget) {
          out_.budget_exhausted = true;
          return best;
        }
        for (auto& e : run(batch)) {
          if (e.merit > best.merit) best = std::move(e);
        }
      }
    }
    return best;
  }

 private:
  const SearchSpec& spec_;
  SearchResult& out_;
};

void adopt(SearchResult& out, const Evaluated& e, double target) {
  out.best_params = e.cert.params;
  out.best_certificate = e.cert;
  out.feasible = e.cert.feasible(target);
}

}  // namespace

ParamRange& SearchBox::coordinate(std::string_view name) {
  if (name == "t") return t;
  if (name == "u") return u;
  if (name == "alpha1") return alpha1;
  if (name == "alpha2") return alpha2;
  if (name == "alpha3") return alpha3;
  if (name == "A") return big_a;
  if (name == "epsilon1") return epsilon1;
  throw UsageError("unknown parameter '" + std::string(name) + "'");
}

const ParamRange& SearchBox::coordinate(std::string_view name) const {
  return const_cast<SearchBox*>(this)->coordinate(name);
}

SearchBox SearchBox::degenerate(const ChenParams& p) {
  SearchBox b;
  b.t = {p.loglog_threshold, p.loglog_threshold, Scale::linear};
  b.u = {p.u, p.u, Scale::log};
  b.alpha1 = {p.alpha1, p.alpha1, Scale::log};
  b.alpha2 = {p.alpha2, p.alpha2, Scale::log};
  b.alpha3 = {p.alpha3, p.alpha3, Scale::log};
  b.big_a = {p.big_a, p.big_a, Scale::linear};
  b.epsilon1 = {p.epsilon1, p.epsilon1, Scale::log};
  return b;
}

SearchBox SearchBox::around(const ChenParams& p) {
  SearchBox b;
  b.t = {std::min(15.0, p.loglog_threshold), p.loglog_threshold, Scale::linear};
  b.u = {std::max(9551.0, p.u / 3), std::min(1e18, p.u * 3), Scale::log};
  auto alpha = [](double a, double cap) {
    return ParamRange{a / 3, std::min(a * 3, cap * 0.999), Scale::log};
  };
  b.alpha1 = alpha(p.alpha1, 1.0 / 8);
  b.alpha2 = alpha(p.alpha2, 1.0 / 24);
  b.alpha3 = p.alpha3 > 0 ? alpha(p.alpha3, 1.0 / 16) : ParamRange{0, 0, Scale::linear};
  b.big_a = {p.big_a - 2, p.big_a + 2, Scale::linear};
  b.epsilon1 = {p.epsilon1 * 1e-10, std::min(p.epsilon1 * 1e10, 0.5), Scale::log};
  return b;
}

Feasibility feasible(const ChenParams& p, double target, int digits) {
  Feasibility f;
  f.certificate = chen_coefficient(p, digits);
  f.ok = f.certificate.feasible(target);
  return f;
}

SearchResult minimize_threshold(const SearchSpec& spec) {
  if (spec.budget < 1) throw UsageError("budget must be at least 1");
  SearchResult out;
  Search search(spec, out);
  double lo = spec.box.t.lo;
  double hi = spec.box.t.hi;
  Evaluated best = search.inner(spec.start, hi);
  adopt(out, best, spec.target_coefficient);
  if (!out.feasible) return out;
  while (hi - lo > spec.t_resolution && !search.exhausted()) {
    const double mid = lo + (hi - lo) / 2;
    Evaluated e = search.inner(best.cert.params, mid);
    if (e.cert.feasible(spec.target_coefficient)) {
      hi = mid;
      best = std::move(e);
    } else {
      lo = mid;
    }
  }
  if (search.exhausted()) out.budget_exhausted = true;
  adopt(out, best, spec.target_coefficient);
  return out;
}

SearchResult maximize_coefficient(const SearchSpec& spec) {
  if (spec.budget < 1) throw UsageError("budget must be at least 1");
  SearchResult out;
  Search search(spec, out);
  adopt(out, search.inner(spec.start, spec.fixed_t), spec.target_coefficient);
  return out;
}

SearchResult optimize(const SearchSpec& spec) {
  return spec.objective == Objective::min_threshold ? minimize_threshold(spec)
                                                    : maximize_coefficient(spec);
}

std::string trace_csv(const SearchResult& r) {
  std::ostringstream os;
  os << "t,u,alpha1,alpha2,alpha3,A,eps1,coefficient,feasible\n";
  for (const auto& e : r.trace) {
    const auto& p = e.params;
    os << shortest(p.loglog_threshold) << ',' << shortest(p.u) << ',' << shortest(p.alpha1) << ','
       << shortest(p.alpha2) << ',' << shortest(p.alpha3) << ',' << shortest(p.big_a) << ','
       << shortest(p.epsilon1) << ',' << (e.coefficient ? shortest(*e.coefficient) : "") << ','
       << (e.feasible ? "true" : "false") << '\n';
  }
  return os.str();
}

std::vector<SensitivityRow> sensitivity(const ChenParams& center, const SensitivitySpec& spec) {
  const BoundCertificate c0 = chen_coefficient(center, spec.precision_digits);
  if (!c0.positive()) throw ConditionError("sensitivity needs a feasible center");
  const double base = c0.final_coefficient->lower_double();
  static constexpr std::array<const char*, 7> kNames{"t",      "u",  "alpha1",  "alpha2",
                                                     "alpha3", "A", "epsilon1"};
  std::vector<SensitivityRow> rows(kNames.size());
  const int n = static_cast<int>(kNames.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const std::string name = kNames[i];
    const bool log_scale = name == "u" || name == "epsilon1";
    SensitivityRow row;
    row.parameter = name;
    row.coefficient_center = base;
    ChenParams lo = center, hi = center;
    double& xl = field(lo, name);
    double& xh = field(hi, name);
    if (log_scale) {
      xl *= std::pow(10.0, -spec.log_decades);
      xh *= std::pow(10.0, spec.log_decades);
    } else {
      xl *= 1 - spec.linear_relative;
      xh *= 1 + spec.linear_relative;
    }
    row.minus_value = xl;
    row.plus_value = xh;
    const BoundCertificate cl = chen_coefficient(lo, spec.precision_digits);
    const BoundCertificate ch = chen_coefficient(hi, spec.precision_digits);
    row.conditions_minus = cl.conditions_ok();
    row.conditions_plus = ch.conditions_ok();
    if (cl.final_coefficient) {
      row.coefficient_minus = cl.final_coefficient->lower_double();
      row.relative_minus = (*row.coefficient_minus - base) / std::fabs(base);
    }
    if (ch.final_coefficient) {
      row.coefficient_plus = ch.final_coefficient->lower_double();
      row.relative_plus = (*row.coefficient_plus - base) / std::fabs(base);
    }
    rows[i] = row;
  }
  return rows;
}

}  // namespace chenbound
