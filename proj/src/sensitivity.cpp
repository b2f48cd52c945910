// Copyright 2026 The postfoot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "postfoot/sensitivity.hpp"

#include <algorithm>
#include <sstream>

#include "postfoot/errors.hpp"
#include "postfoot/format.hpp"

namespace postfoot {

EmissionsBreakdown run_preset(std::string_view name) { return total_emissions(preset_scenario(name)); }

std::vector<SensitivityRow> sensitivity_report(const std::vector<Scenario>& scenarios) {
  std::vector<SensitivityRow> rows;
  for (const auto& s : scenarios) {
    auto b = total_emissions(s);
    double total = b.network.c_total.in(MassUnit::kg);
    double share = total > 0.0 ? b.network.c_emb.in(MassUnit::kg) / total : 0.0;
    rows.push_back({s.name, b.network.c_total.to(MassUnit::Mt), s.description, share});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.c_total != b.c_total) return a.c_total < b.c_total;
    return a.scenario < b.scenario;
  });
  return rows;
}

std::vector<SensitivityRow> table3_report() { return sensitivity_report(table3_scenarios()); }

namespace {

void check_spec(const Scenario& base, const SweepSpec& spec) {
  if (spec.values.empty()) throw InputError(spec.path, "sweep needs at least one value");
  get_path(base, spec.path);  // throws for unresolvable paths
}

SweepRow evaluate_row(const Scenario& base, const std::string& path, double value) {
  SweepRow row;
  row.value = value;
  try {
    Scenario s = base;
    set_path(s, path, value);
    auto b = total_emissions(s);
    row.c_total = b.network.c_total.to(MassUnit::t);
    row.c_elec = b.network.c_elec.to(MassUnit::t);
    row.c_emb = b.network.c_emb.to(MassUnit::t);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> sweep_serial(const Scenario& base, const SweepSpec& spec) {
  check_spec(base, spec);
  std::vector<SweepRow> rows;
  rows.reserve(spec.values.size());
  for (double v : spec.values) rows.push_back(evaluate_row(base, spec.path, v));
  return rows;
}

std::vector<SweepRow> sweep(const Scenario& base, const SweepSpec& spec) {
  check_spec(base, spec);
  std::vector<SweepRow> rows(spec.values.size());
  const auto n = static_cast<long>(spec.values.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    rows[static_cast<std::size_t>(i)] = evaluate_row(base, spec.path, spec.values[static_cast<std::size_t>(i)]);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "value,c_total_t,c_elec_t,c_emb_t\n";
  for (const auto& r : rows) {
    out << fmt::exact(r.value);
    for (const auto& m : {r.c_total, r.c_elec, r.c_emb}) {
      out << ',';
      if (m) out << fmt::exact(m->in(MassUnit::t));
    }
    out << '\n';
  }
  return out.str();
}

double elasticity(const Scenario& s, std::string_view path, double relative_delta, Metric metric) {
  if (!(relative_delta > 0.0 && relative_delta < 1.0)) {
    throw InputError("relative_delta must lie in (0, 1), got " + fmt::compact(relative_delta));
  }
  const double p0 = get_path(s, path);
  if (!(p0 > 0.0)) throw InputError(std::string(path), "elasticity needs a positive base value");

  auto measure = [&](const Scenario& x) {
    auto b = total_emissions(x).network;
    switch (metric) {
      case Metric::Electricity: return b.c_elec.in(MassUnit::kg);
      case Metric::Embodied: return b.c_emb.in(MassUnit::kg);
      case Metric::Total: break;
    }
    return b.c_total.in(MassUnit::kg);
  };
  auto at = [&](double value) {
    Scenario x = s;
    set_path(x, path, value);
    return measure(x);
  };

  const double c0 = measure(s);
  if (c0 == 0.0) return 0.0;
  const double up = at(p0 * (1.0 + relative_delta));
  const double down = at(p0 * (1.0 - relative_delta));
  return ((up - down) / c0) / (2.0 * relative_delta);
}

}  // namespace postfoot
