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

#include "postfoot/parameters.hpp"

#include <cmath>
#include <set>

#include "postfoot/format.hpp"

namespace postfoot {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Empirical: return "empirical";
    case Provenance::Literature: return "literature";
    case Provenance::Assumed: return "assumed";
  }
  return "?";
}

std::string_view to_string(PlotterKind k) {
  switch (k) {
    case PlotterKind::Standard: return "standard";
    case PlotterKind::MadMax: return "madmax";
    case PlotterKind::BladebitRam: return "bladebit_ram";
    case PlotterKind::BladebitGpu: return "bladebit_gpu";
  }
  return "?";
}

std::optional<PlotterKind> plotter_kind_from_string(std::string_view s) {
  for (auto k : kAllPlotterKinds) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

namespace {

using P = ParameterSet;
constexpr auto E = Provenance::Empirical;
constexpr auto L = Provenance::Literature;
constexpr auto A = Provenance::Assumed;

std::int64_t to_node_count(double v) {
  if (!(v >= 1.0) || std::floor(v) != v || v > 9.0e15) {
    throw InputError("n_node must be a positive integer, got " + fmt::compact(v));
  }
  return static_cast<std::int64_t>(v);
}

double positive(double v, std::string_view what) {
  if (!(std::isfinite(v) && v > 0.0)) {
    throw InputError(std::string(what) + " must be positive, got " + fmt::compact(v));
  }
  return v;
}

const ParameterSpec kRegistry[] = {
    {"s_net", "EiB", "Total network netspace", L,
     [](const P& p) { return p.s_net.in(DataUnit::EiB); }, [](P& p, double v) { p.s_net = eib(v); }},
    {"s_netg", "EiB", "Netspace growth over the modeled year", L,
     [](const P& p) { return p.s_netg.in(DataUnit::EiB); }, [](P& p, double v) { p.s_netg = eib(v); }},
    {"n_node", "nodes", "Number of nodes in the network", L,
     [](const P& p) { return static_cast<double>(p.n_node); },
     [](P& p, double v) { p.n_node = to_node_count(v); }},
    {"s_plot", "GiB", "Size of an uncompressed k=32 plot", L,
     [](const P& p) { return p.s_plot.in(DataUnit::GiB); },
     [](P& p, double v) { p.s_plot = gib(positive(v, "s_plot")); }},
    {"s_plot_c5", "GiB", "Size of a C5-compressed k=32 plot", L,
     [](const P& p) { return p.s_plot_c5.in(DataUnit::GiB); },
     [](P& p, double v) { p.s_plot_c5 = gib(positive(v, "s_plot_c5")); }},
    {"e_plot_std", "kWh", "Energy per plot, standard plotter", E,
     [](const P& p) { return p.e_plot_std.in(EnergyUnit::kWh); },
     [](P& p, double v) { p.e_plot_std = kwh(v); }},
    {"e_plot_c5_ram", "Wh", "Energy per C5 plot, Bladebit RAM mode", E,
     [](const P& p) { return p.e_plot_c5_ram.in(EnergyUnit::Wh); },
     [](P& p, double v) { p.e_plot_c5_ram = wh(v); }},
    {"e_plot_c5_gpu", "Wh", "Energy per C5 plot, Bladebit GPU mode", E,
     [](const P& p) { return p.e_plot_c5_gpu.in(EnergyUnit::Wh); },
     [](P& p, double v) { p.e_plot_c5_gpu = wh(v); }},
    {"e_plot_mm", "Wh", "Energy per plot, MadMax plotter", E,
     [](const P& p) { return p.e_plot_mm.in(EnergyUnit::Wh); },
     [](P& p, double v) { p.e_plot_mm = wh(v); }},
    {"e_farm_server", "kWh", "Annual farming energy of one server node", E,
     [](const P& p) { return p.e_farm_server.in(EnergyUnit::kWh); },
     [](P& p, double v) { p.e_farm_server = kwh(v); }},
    {"pue_server", "1", "Power usage effectiveness of server infrastructure", L,
     [](const P& p) { return p.pue_server.value(); }, [](P& p, double v) { p.pue_server = Pue(v); }},
    {"i_elec", "kg/kWh", "Grid carbon intensity", L,
     [](const P& p) { return p.i_elec.kg_per_kwh(); },
     [](P& p, double v) { p.i_elec = CarbonIntensity(v); }},
    {"t_writes_std", "TiB", "SSD writes per plot, standard plotter", E,
     [](const P& p) { return p.t_writes_std.in(DataUnit::TiB); },
     [](P& p, double v) { p.t_writes_std = tib(v); }},
    {"t_writes_mm", "TiB", "SSD writes per plot, MadMax plotter", E,
     [](const P& p) { return p.t_writes_mm.in(DataUnit::TiB); },
     [](P& p, double v) { p.t_writes_mm = tib(v); }},
    {"t_writes_bb", "TiB", "SSD writes per C5 plot, Bladebit", E,
     [](const P& p) { return p.t_writes_bb.in(DataUnit::TiB); },
     [](P& p, double v) { p.t_writes_bb = tib(v); }},
    {"gamma_ssd", "kg/TiB", "Embodied carbon of 1 TiB of SSD", L,
     [](const P& p) { return p.gamma_ssd; },
     [](P& p, double v) { p.gamma_ssd = detail::require_non_negative(v, "gamma_ssd"); }},
    {"gamma_hdd", "kg/TiB", "Embodied carbon of 1 TiB of HDD", L,
     [](const P& p) { return p.gamma_hdd; },
     [](P& p, double v) { p.gamma_hdd = detail::require_non_negative(v, "gamma_hdd"); }},
    {"gamma_gpu", "kg", "Embodied carbon of one GPU", L,
     [](const P& p) { return p.gamma_gpu; },
     [](P& p, double v) { p.gamma_gpu = detail::require_non_negative(v, "gamma_gpu"); }},
    {"gamma_enter", "kg", "Embodied carbon of one server", L,
     [](const P& p) { return p.gamma_enter; },
     [](P& p, double v) { p.gamma_enter = detail::require_non_negative(v, "gamma_enter"); }},
    {"gamma_ram", "kg/GiB", "Embodied carbon of 1 GiB of RAM", A,
     [](const P& p) { return p.gamma_ram; },
     [](P& p, double v) { p.gamma_ram = detail::require_non_negative(v, "gamma_ram"); }},
    {"tbw_ssd_server", "TiB", "Rated total bytes written of a server SSD", L,
     [](const P& p) { return p.tbw_ssd_server.in(DataUnit::TiB); },
     [](P& p, double v) { p.tbw_ssd_server = tib(positive(v, "tbw_ssd_server")); }},
    {"l_lifetime", "yr", "Operational lifetime of hardware", L,
     [](const P& p) { return p.l_lifetime.years(); },
     [](P& p, double v) { p.l_lifetime = DurationYears(v); }},
    {"f_bb", "1", "Server netspace growth plotted with Bladebit (C5)", L,
     [](const P& p) { return p.f_bb.value(); }, [](P& p, double v) { p.f_bb = Fraction(v); }},
    {"f_mm", "1", "Server netspace growth plotted with MadMax", A,
     [](const P& p) { return p.f_mm.value(); }, [](P& p, double v) { p.f_mm = Fraction(v); }},
    {"f_std", "1", "Server netspace growth plotted with the standard plotter", A,
     [](const P& p) { return p.f_std.value(); }, [](P& p, double v) { p.f_std = Fraction(v); }},
    {"f_allocation", "1", "Share of a machine's embodied carbon allocated to farming", A,
     [](const P& p) { return p.f_allocation.value(); },
     [](P& p, double v) { p.f_allocation = Fraction(v); }},
};

}  // namespace

std::span<const ParameterSpec> parameter_registry() { return kRegistry; }

const ParameterSpec* find_parameter(std::string_view name) {
  // Bare table symbols for the server-only entries.
  if (name == "e_farm") name = "e_farm_server";
  if (name == "pue") name = "pue_server";
  if (name == "tbw_ssd") name = "tbw_ssd_server";
  for (const auto& spec : kRegistry) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

ParameterSet default_parameter_set() {
  ParameterSet p;
  for (const auto& spec : kRegistry) p.provenance[std::string(spec.name)] = spec.default_provenance;
  return p;
}

ResolvedCohort resolve(const Cohort& c, const ParameterSet& p) {
  ResolvedCohort r;
  r.name = c.name;
  r.node_share = c.node_share.value();
  r.netspace_share = c.netspace_share.value();
  r.pue = c.pue.value_or(p.pue_server);
  r.mix = c.mix.value_or(PlotMix{p.f_bb, p.f_mm, p.f_std});
  r.bb_gpu_split = c.bb_gpu_split.value();
  r.gpu_node_split = c.gpu_node_split.value_or(c.bb_gpu_split).value();

  auto geometry = [&](PlotterKind k, Energy e) {
    switch (k) {
      case PlotterKind::Standard: return PlotterProfile{k, e, p.t_writes_std, p.s_plot, false};
      case PlotterKind::MadMax: return PlotterProfile{k, e, p.t_writes_mm, p.s_plot, false};
      case PlotterKind::BladebitRam:
      case PlotterKind::BladebitGpu: return PlotterProfile{k, e, p.t_writes_bb, p.s_plot_c5, true};
    }
    return PlotterProfile{};
  };
  if (c.profile_source == ProfileSource::Measured) {
    r.profiles[PlotterKind::Standard] = geometry(PlotterKind::Standard, p.e_plot_std);
    r.profiles[PlotterKind::MadMax] = geometry(PlotterKind::MadMax, p.e_plot_mm);
    r.profiles[PlotterKind::BladebitRam] = geometry(PlotterKind::BladebitRam, p.e_plot_c5_ram);
    r.profiles[PlotterKind::BladebitGpu] = geometry(PlotterKind::BladebitGpu, p.e_plot_c5_gpu);
  }
  for (const auto& [kind, energy] : c.plot_energy) r.profiles[kind] = geometry(kind, energy);

  r.farm_energy_per_node_year = c.farm_energy_per_node_year.value_or(p.e_farm_server);
  r.chassis_kg = c.embodied_chassis_kg.value_or(p.gamma_enter);
  r.gpu_kg = c.embodied_gpu_kg.value_or(p.gamma_gpu);
  r.ram_kg_per_node = c.ram_gib * p.gamma_ram;
  r.bladebit_ram_kg_per_node = c.bladebit_ram_gib * p.gamma_ram;
  r.ssd_tbw = c.ssd_tbw.value_or(p.tbw_ssd_server);
  return r;
}

namespace {

constexpr double kSumTolerance = 1e-9;

bool sums_to_one(double s) { return std::fabs(s - 1.0) <= kSumTolerance; }

}  // namespace

ValidationReport validate(const Scenario& s) {
  ValidationReport report;
  const auto& p = s.params;
  auto add = [&](std::string path, std::string msg) {
    report.push_back({std::move(path), std::move(msg)});
  };

  double fsum = p.f_bb.value() + p.f_mm.value() + p.f_std.value();
  if (!sums_to_one(fsum)) add("global.f_bb+f_mm+f_std", "mix sums to " + fmt::compact(fsum));
  if (p.n_node < 1) add("global.n_node", "must be >= 1");
  if (!(p.s_plot.value() > 0.0)) add("global.s_plot", "degenerate plot size");
  if (!(p.s_plot_c5.value() > 0.0)) add("global.s_plot_c5", "degenerate plot size");
  if (!(p.tbw_ssd_server.value() > 0.0)) add("global.tbw_ssd_server", "must be > 0");

  if (s.cohorts.empty()) add("cohort", "scenario has no cohorts");

  std::set<std::string> names;
  double node_sum = 0.0;
  double space_sum = 0.0;
  for (const auto& c : s.cohorts) {
    std::string base = "cohort." + (c.name.empty() ? std::string("<unnamed>") : c.name);
    if (c.name.empty()) add(base + ".name", "cohort name is empty");
    if (!names.insert(c.name).second) add(base + ".name", "duplicate cohort name");
    node_sum += c.node_share.value();
    space_sum += c.netspace_share.value();

    ResolvedCohort r = resolve(c, p);
    if (!sums_to_one(r.mix.sum())) add(base + ".mix", "mix sums to " + fmt::compact(r.mix.sum()));
    if (!(r.ssd_tbw.value() > 0.0)) add(base + ".ssd_tbw_tib", "must be > 0");
    if (c.embodied_chassis_kg && *c.embodied_chassis_kg < 0.0) add(base + ".embodied_chassis_kg", "must be >= 0");
    if (c.embodied_gpu_kg && *c.embodied_gpu_kg < 0.0) add(base + ".embodied_gpu_kg", "must be >= 0");
    if (c.ram_gib < 0.0) add(base + ".ram_gib", "must be >= 0");
    if (c.bladebit_ram_gib < 0.0) add(base + ".bladebit_ram_gib", "must be >= 0");

    // A plotter family with a nonzero share needs an energy for each mode it uses.
    auto need = [&](PlotterKind k, double share) {
      if (share > 0.0 && !r.profiles.contains(k)) {
        add(base + ".plot_energy_kwh." + std::string(to_string(k)), "missing profile for a used plotter");
      }
    };
    need(PlotterKind::Standard, r.mix.standard.value());
    need(PlotterKind::MadMax, r.mix.madmax.value());
    need(PlotterKind::BladebitRam, r.mix.bladebit.value() * (1.0 - r.bb_gpu_split));
    need(PlotterKind::BladebitGpu, r.mix.bladebit.value() * r.bb_gpu_split);
  }
  if (!s.cohorts.empty()) {
    if (!sums_to_one(node_sum)) add("cohort.*.node_share", "node_share sums to " + fmt::compact(node_sum));
    if (!sums_to_one(space_sum)) {
      add("cohort.*.netspace_share", "netspace_share sums to " + fmt::compact(space_sum));
    }
  }
  return report;
}

std::string format_report(const ValidationReport& r) {
  std::string out;
  for (const auto& v : r) {
    if (!out.empty()) out += "; ";
    out += v.path + ": " + v.message;
  }
  return out;
}

void require_valid(const Scenario& s) {
  auto report = validate(s);
  if (!report.empty()) throw InputError("scenario '" + s.name + "' is invalid", format_report(report));
}

// ---------------------------------------------------------------------------
// Presets

namespace {

PlotMix mix(double bb, double mm, double std_) { return {Fraction(bb), Fraction(mm), Fraction(std_)}; }

// Bladebit share handed to MadMax:Standard at 3:1, the server f_MM:f_std prior.
PlotMix without_compression(const PlotMix& m) {
  double bb = m.bladebit.value();
  return mix(0.0, m.madmax.value() + 0.75 * bb, m.standard.value() + 0.25 * bb);
}

Cohort server_cohort() {
  Cohort c;
  c.name = "server";
  c.profile_source = ProfileSource::Measured;
  return c;
}

Cohort desktop_cohort() {
  Cohort c;
  c.name = "desktop";
  c.node_share = Fraction(0.60);
  c.netspace_share = Fraction(0.30);
  c.pue = Pue(1.2);
  c.mix = mix(0.2, 0.4, 0.4);
  c.bb_gpu_split = Fraction(1.0);
  c.profile_source = ProfileSource::Explicit;
  // plotting hours x 800 W
  c.plot_energy = {{PlotterKind::BladebitGpu, kwh(0.25 * 0.8)},
                   {PlotterKind::MadMax, kwh(1.5 * 0.8)},
                   {PlotterKind::Standard, kwh(8.0 * 0.8)}};
  c.farm_energy_per_node_year = Power(66.0) * DurationYears(1.0);
  c.embodied_chassis_kg = 350.0;
  c.ram_gib = 16.0;
  c.ssd_tbw = tib(600.0);
  return c;
}

Cohort laptop_cohort() {
  Cohort c;
  c.name = "laptop";
  c.node_share = Fraction(0.25);
  c.netspace_share = Fraction(0.05);
  c.pue = Pue(1.0);
  c.mix = mix(0.0, 0.15, 0.85);
  c.bb_gpu_split = Fraction(0.0);
  c.profile_source = ProfileSource::Explicit;
  // plotting hours x 100 W
  c.plot_energy = {{PlotterKind::MadMax, kwh(2.0 * 0.1)}, {PlotterKind::Standard, kwh(10.0 * 0.1)}};
  c.farm_energy_per_node_year = Power(32.0) * DurationYears(1.0);
  c.embodied_chassis_kg = 200.0;
  c.ram_gib = 8.0;
  c.ssd_tbw = tib(600.0);
  return c;
}

Cohort& find(Scenario& s, std::string_view name) {
  for (auto& c : s.cohorts) {
    if (c.name == name) return c;
  }
  throw InvariantError("preset lacks cohort " + std::string(name));
}

}  // namespace

Scenario method1_scenario() {
  Scenario s;
  s.name = "method1";
  s.description = "All nodes = servers, with BladeBit";
  s.params = default_parameter_set();
  Cohort server = server_cohort();
  // Every Bladebit node is costed as a GPU machine, N_node,C5 = N_node * f_BB.
  server.gpu_node_split = Fraction(1.0);
  s.cohorts = {server};
  return s;
}

Scenario method2_scenario() {
  Scenario s;
  s.name = "method2";
  s.description = "Baseline: tiered cohorts with compression";
  s.params = default_parameter_set();
  Cohort server = server_cohort();
  server.node_share = Fraction(0.15);
  server.netspace_share = Fraction(0.65);
  server.gpu_node_split = Fraction(0.5);
  server.bladebit_ram_gib = 416.0;
  s.cohorts = {server, desktop_cohort(), laptop_cohort()};
  return s;
}

std::vector<Scenario> table3_scenarios() {
  Scenario hom_nc = method1_scenario();
  hom_nc.name = "homogeneous-no-compression";
  hom_nc.description = "All nodes = servers, no BladeBit";
  hom_nc.cohorts[0].mix = without_compression(resolve(hom_nc.cohorts[0], hom_nc.params).mix);

  Scenario tier_nc = method2_scenario();
  tier_nc.name = "tiered-no-compression";
  tier_nc.description = "Hardware diversity without C5 plots";
  for (auto& c : tier_nc.cohorts) c.mix = without_compression(resolve(c, tier_nc.params).mix);

  Scenario low = method2_scenario();
  low.name = "tiered-low-server";
  low.description = "Lower server plot share (65% -> 30%)";
  find(low, "server").netspace_share = Fraction(0.30);
  find(low, "desktop").netspace_share = Fraction(0.60);
  find(low, "laptop").netspace_share = Fraction(0.10);

  return {method1_scenario(), method2_scenario(), hom_nc, tier_nc, low};
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& s : table3_scenarios()) names.push_back(s.name);
  return names;
}

Scenario preset_scenario(std::string_view name) {
  for (auto& s : table3_scenarios()) {
    if (s.name == name) return s;
  }
  std::string known;
  for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
  throw InputError("unknown preset '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace postfoot
