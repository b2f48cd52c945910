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

#include <string>

#include "postfoot/parameters.hpp"

namespace postfoot {

namespace {

constexpr std::string_view kCohortFields[] = {
    "node_share",          "netspace_share",
    "pue",                 "bb_gpu_split",
    "gpu_node_split",      "farm_kwh_per_node_year",
    "embodied_chassis_kg", "embodied_gpu_kg",
    "ram_gib",             "bladebit_ram_gib",
    "ssd_tbw_tib",         "mix.bladebit",
    "mix.madmax",          "mix.standard",
    "plot_energy_kwh.standard", "plot_energy_kwh.madmax",
    "plot_energy_kwh.bladebit_ram", "plot_energy_kwh.bladebit_gpu",
};

double non_negative(double v, std::string_view field) {
  return detail::require_non_negative(v, field);
}

template <class S>
auto& cohort_by_name(S& s, std::string_view name, std::string_view path) {
  for (auto& c : s.cohorts) {
    if (c.name == name) return c;
  }
  throw InputError(std::string(path), "no cohort named '" + std::string(name) + "'");
}

struct SplitPath {
  bool global = false;
  std::string cohort;
  std::string field;
};

SplitPath split(std::string_view path) {
  if (path.starts_with("global.")) return {true, "", std::string(path.substr(7))};
  if (path.starts_with("cohort.")) {
    auto rest = path.substr(7);
    auto dot = rest.find('.');
    if (dot != std::string_view::npos && dot > 0 && dot + 1 < rest.size()) {
      return {false, std::string(rest.substr(0, dot)), std::string(rest.substr(dot + 1))};
    }
  }
  throw InputError(std::string(path), "unresolvable parameter path (expected global.<symbol> or cohort.<name>.<field>)");
}

const ParameterSpec& global_spec(std::string_view field, std::string_view path) {
  const ParameterSpec* spec = find_parameter(field);
  if (spec == nullptr) throw InputError(std::string(path), "unknown global parameter '" + std::string(field) + "'");
  return *spec;
}

}  // namespace

std::span<const std::string_view> cohort_numeric_fields() { return kCohortFields; }

void set_cohort_field(Cohort& c, const ParameterSet& p, std::string_view field, double v) {
  if (field == "node_share") c.node_share = Fraction(v);
  else if (field == "netspace_share") c.netspace_share = Fraction(v);
  else if (field == "pue") c.pue = Pue(v);
  else if (field == "bb_gpu_split") c.bb_gpu_split = Fraction(v);
  else if (field == "gpu_node_split") c.gpu_node_split = Fraction(v);
  else if (field == "farm_kwh_per_node_year") c.farm_energy_per_node_year = kwh(v);
  else if (field == "embodied_chassis_kg") c.embodied_chassis_kg = non_negative(v, field);
  else if (field == "embodied_gpu_kg") c.embodied_gpu_kg = non_negative(v, field);
  else if (field == "ram_gib") c.ram_gib = non_negative(v, field);
  else if (field == "bladebit_ram_gib") c.bladebit_ram_gib = non_negative(v, field);
  else if (field == "ssd_tbw_tib") c.ssd_tbw = tib(v);
  else if (field.starts_with("mix.")) {
    PlotMix m = c.mix.value_or(PlotMix{p.f_bb, p.f_mm, p.f_std});
    auto part = field.substr(4);
    if (part == "bladebit") m.bladebit = Fraction(v);
    else if (part == "madmax") m.madmax = Fraction(v);
    else if (part == "standard") m.standard = Fraction(v);
    else throw InputError(std::string(field), "unknown mix component");
    c.mix = m;
  } else if (field.starts_with("plot_energy_kwh.")) {
    auto kind = plotter_kind_from_string(field.substr(16));
    if (!kind) throw InputError(std::string(field), "unknown plotter kind");
    c.plot_energy[*kind] = kwh(v);
  } else {
    throw InputError(std::string(field), "unknown cohort field");
  }
}

double get_cohort_field(const Cohort& c, const ParameterSet& p, std::string_view field) {
  ResolvedCohort r = resolve(c, p);
  if (field == "node_share") return r.node_share;
  if (field == "netspace_share") return r.netspace_share;
  if (field == "pue") return r.pue.value();
  if (field == "bb_gpu_split") return r.bb_gpu_split;
  if (field == "gpu_node_split") return r.gpu_node_split;
  if (field == "farm_kwh_per_node_year") return r.farm_energy_per_node_year.in(EnergyUnit::kWh);
  if (field == "embodied_chassis_kg") return r.chassis_kg;
  if (field == "embodied_gpu_kg") return r.gpu_kg;
  if (field == "ram_gib") return c.ram_gib;
  if (field == "bladebit_ram_gib") return c.bladebit_ram_gib;
  if (field == "ssd_tbw_tib") return r.ssd_tbw.in(DataUnit::TiB);
  if (field == "mix.bladebit") return r.mix.bladebit.value();
  if (field == "mix.madmax") return r.mix.madmax.value();
  if (field == "mix.standard") return r.mix.standard.value();
  if (field.starts_with("plot_energy_kwh.")) {
    auto kind = plotter_kind_from_string(field.substr(16));
    if (!kind) throw InputError(std::string(field), "unknown plotter kind");
    auto it = r.profiles.find(*kind);
    return it == r.profiles.end() ? 0.0 : it->second.per_plot_energy.in(EnergyUnit::kWh);
  }
  throw InputError(std::string(field), "unknown cohort field");
}

double get_path(const Scenario& s, std::string_view path) {
  SplitPath sp = split(path);
  if (sp.global) return global_spec(sp.field, path).get(s.params);
  try {
    return get_cohort_field(cohort_by_name(s, sp.cohort, path), s.params, sp.field);
  } catch (const InputError& e) {
    throw InputError(std::string(path), e.what());
  }
}

void set_path(Scenario& s, std::string_view path, double value) {
  SplitPath sp = split(path);
  try {
    if (sp.global) {
      global_spec(sp.field, path).set(s.params, value);
    } else {
      set_cohort_field(cohort_by_name(s, sp.cohort, path), s.params, sp.field, value);
    }
  } catch (const InputError& e) {
    std::string msg = e.what();
    if (msg.starts_with(std::string(path))) throw;
    throw InputError(std::string(path), msg);
  }
}

}  // namespace postfoot
