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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "postfoot/quantities.hpp"

namespace postfoot {

enum class Provenance { Empirical, Literature, Assumed };

std::string_view to_string(Provenance p);

enum class PlotterKind { Standard, MadMax, BladebitRam, BladebitGpu };

inline constexpr PlotterKind kAllPlotterKinds[] = {PlotterKind::Standard, PlotterKind::MadMax,
                                                   PlotterKind::BladebitRam, PlotterKind::BladebitGpu};

// Lower-snake-case key used in files and CLI output ("standard", "bladebit_gpu", ...).
std::string_view to_string(PlotterKind k);
std::optional<PlotterKind> plotter_kind_from_string(std::string_view s);
inline bool is_bladebit(PlotterKind k) {
  return k == PlotterKind::BladebitRam || k == PlotterKind::BladebitGpu;
}

// Network-wide model inputs. Defaults are the measured and literature values
// for a Chia-like network in early 2024.
struct ParameterSet {
  DataSize s_net = eib(33.8465);
  DataSize s_netg = eib(12.6593);
  std::int64_t n_node = 250000;
  DataSize s_plot = gib(101.4);
  DataSize s_plot_c5 = gib(81.3);

  Energy e_plot_std = kwh(4.995);
  Energy e_plot_c5_ram = wh(165.637);
  Energy e_plot_c5_gpu = wh(85.968);
  Energy e_plot_mm = wh(927.634);
  Energy e_farm_server = kwh(6761.283);  // per node-year

  Pue pue_server{1.58};
  CarbonIntensity i_elec{0.384};

  DataSize t_writes_std = tib(1.64);
  DataSize t_writes_mm = tib(1.357);
  DataSize t_writes_bb = tib(0.084);

  double gamma_ssd = 160.0;    // kg CO2e per TiB of SSD
  double gamma_hdd = 20.0;     // kg CO2e per TiB of HDD
  double gamma_gpu = 200.0;    // kg CO2e per GPU
  double gamma_enter = 1000.0; // kg CO2e per server chassis
  double gamma_ram = 0.6;      // kg CO2e per GiB of RAM
  DataSize tbw_ssd_server = tib(2390.15207);
  DurationYears l_lifetime{4.0};

  Fraction f_bb{0.6};
  Fraction f_mm{0.3};
  Fraction f_std{0.1};
  Fraction f_allocation{0.67};

  std::map<std::string, Provenance> provenance;

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

ParameterSet default_parameter_set();

// One entry per overridable symbol. Values are read and written in `unit`.
struct ParameterSpec {
  std::string_view name;
  std::string_view unit;
  std::string_view description;
  Provenance default_provenance;
  double (*get)(const ParameterSet&);
  void (*set)(ParameterSet&, double);
};

std::span<const ParameterSpec> parameter_registry();
const ParameterSpec* find_parameter(std::string_view name);

// Fractions of a cohort's netspace growth plotted with each plotter family.
struct PlotMix {
  Fraction bladebit{0.0};
  Fraction madmax{0.0};
  Fraction standard{1.0};

  double sum() const { return bladebit.value() + madmax.value() + standard.value(); }
  friend bool operator==(const PlotMix&, const PlotMix&) = default;
};

struct PlotterProfile {
  PlotterKind kind = PlotterKind::Standard;
  Energy per_plot_energy;
  DataSize per_plot_writes;
  DataSize plot_size;
  bool compressed = false;
};

// Where a cohort's per-plot energies come from: the global measured values, or
// the cohort's own plot_energy table.
enum class ProfileSource { Measured, Explicit };

// A hardware class sharing one efficiency/PUE/embodied profile. Unset optional
// fields inherit the global server values of the ParameterSet.
struct Cohort {
  std::string name;
  Fraction node_share{1.0};
  Fraction netspace_share{1.0};
  std::optional<Pue> pue;
  std::optional<PlotMix> mix;
  Fraction bb_gpu_split{0.5};              // Bladebit plots made in GPU mode
  std::optional<Fraction> gpu_node_split;  // Bladebit nodes charged as GPU machines
  ProfileSource profile_source = ProfileSource::Measured;
  std::map<PlotterKind, Energy> plot_energy;
  std::optional<Energy> farm_energy_per_node_year;
  std::optional<double> embodied_chassis_kg;
  std::optional<double> embodied_gpu_kg;
  double ram_gib = 0.0;           // charged to every node
  double bladebit_ram_gib = 0.0;  // charged to RAM-mode Bladebit nodes
  std::optional<DataSize> ssd_tbw;

  friend bool operator==(const Cohort&, const Cohort&) = default;
};

// Cohort with every inherited value filled in from a ParameterSet.
struct ResolvedCohort {
  std::string name;
  double node_share = 0.0;
  double netspace_share = 0.0;
  Pue pue;
  PlotMix mix;
  double bb_gpu_split = 0.0;
  double gpu_node_split = 0.0;
  std::map<PlotterKind, PlotterProfile> profiles;  // kinds with a known energy
  Energy farm_energy_per_node_year;
  double chassis_kg = 0.0;
  double gpu_kg = 0.0;
  double ram_kg_per_node = 0.0;
  double bladebit_ram_kg_per_node = 0.0;
  DataSize ssd_tbw;
};

ResolvedCohort resolve(const Cohort& c, const ParameterSet& p);

struct Scenario {
  std::string name;
  std::string description;
  ParameterSet params;
  std::vector<Cohort> cohorts;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct Violation {
  std::string path;
  std::string message;
};
using ValidationReport = std::vector<Violation>;

ValidationReport validate(const Scenario& s);
std::string format_report(const ValidationReport& r);

// Throws InputError carrying the formatted report when validation fails.
void require_valid(const Scenario& s);

// Numeric access by dot path: `global.<symbol>` or `cohort.<name>.<field>`,
// where field is one of cohort_numeric_fields() (e.g. `pue`, `mix.bladebit`,
// `plot_energy_kwh.standard`). get_path reports the value the model uses,
// including inherited ones. Both throw InputError for unknown paths; set_path
// also throws when the value breaks the field's own invariant.
double get_path(const Scenario& s, std::string_view path);
void set_path(Scenario& s, std::string_view path, double value);
void set_cohort_field(Cohort& c, const ParameterSet& p, std::string_view field, double value);
double get_cohort_field(const Cohort& c, const ParameterSet& p, std::string_view field);
std::span<const std::string_view> cohort_numeric_fields();

Scenario method1_scenario();
Scenario method2_scenario();
std::vector<Scenario> table3_scenarios();
std::vector<std::string> preset_names();
Scenario preset_scenario(std::string_view name);

}  // namespace postfoot
