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

#include "postfoot/engine.hpp"

#include "postfoot/errors.hpp"

namespace postfoot {

namespace {

CohortAllocation allocate(const ResolvedCohort& c, const ParameterSet& p) {
  DataSize growth = p.s_netg.to(DataUnit::TiB) * c.netspace_share;
  CohortAllocation a;
  a.cohort = c.name;
  a.s_c5 = growth * c.mix.bladebit.value();
  a.s_mm = growth * c.mix.madmax.value();
  a.s_std = growth * c.mix.standard.value();
  a.s_stock = p.s_net.to(DataUnit::TiB) * c.netspace_share;
  return a;
}

double node_count(const ResolvedCohort& c, std::int64_t n_node_total) {
  return c.node_share * static_cast<double>(n_node_total);
}

CarbonMass ssd_wear(const ResolvedCohort& c, const PlotCounts& n, const ParameterSet& p) {
  double tbw = c.ssd_tbw.in(DataUnit::TiB);
  if (!(tbw > 0.0)) throw InputError("cohort." + c.name + ".ssd_tbw_tib", "zero TBW");
  double writes = n.n_std * p.t_writes_std.in(DataUnit::TiB) + n.n_mm * p.t_writes_mm.in(DataUnit::TiB) +
                  n.n_c5 * p.t_writes_bb.in(DataUnit::TiB);
  return kg(writes * p.gamma_ssd / tbw);
}

DeviceEmbodied devices(const ResolvedCohort& c, const ParameterSet& p) {
  double nodes = node_count(c, p.n_node);
  double bladebit_nodes = nodes * c.mix.bladebit.value();
  double gpu_nodes = bladebit_nodes * c.gpu_node_split;
  double ram_mode_nodes = bladebit_nodes - gpu_nodes;
  double amortize = p.f_allocation.value() / p.l_lifetime.years();

  double gpu = gpu_nodes * (c.chassis_kg + c.gpu_kg + c.ram_kg_per_node);
  double nogpu = (nodes - gpu_nodes) * (c.chassis_kg + c.ram_kg_per_node) +
                 ram_mode_nodes * c.bladebit_ram_kg_per_node;
  return {kg(gpu * amortize), kg(nogpu * amortize)};
}

CarbonMass hdd_stock(const CohortAllocation& a, const ParameterSet& p) {
  return kg(a.s_stock.in(DataUnit::TiB) * p.gamma_hdd / p.l_lifetime.years());
}

CohortBreakdown evaluate(const ResolvedCohort& c, const ParameterSet& p) {
  CohortBreakdown b;
  b.name = c.name;
  b.allocation = allocate(c, p);
  b.counts = plot_counts(b.allocation, p);
  b.plotting = plotting_energy(c, b.counts);
  b.e_farm = farming_energy(c, p.n_node);
  b.e_op = b.plotting.total + b.e_farm;
  b.c_elec = electricity_carbon(b.e_op, p.i_elec);
  b.c_emb_ssd = ssd_wear(c, b.counts, p);
  DeviceEmbodied d = devices(c, p);
  b.c_emb_gpu_devices = d.gpu;
  b.c_emb_nogpu_devices = d.nogpu;
  b.c_emb_hdd = hdd_stock(b.allocation, p);
  b.c_emb = b.c_emb_ssd + b.c_emb_gpu_devices + b.c_emb_nogpu_devices + b.c_emb_hdd;
  b.c_total = b.c_elec + b.c_emb;
  return b;
}

void accumulate(CohortBreakdown& into, const CohortBreakdown& c) {
  into.allocation.s_c5 += c.allocation.s_c5;
  into.allocation.s_mm += c.allocation.s_mm;
  into.allocation.s_std += c.allocation.s_std;
  into.allocation.s_stock += c.allocation.s_stock;
  into.counts.n_c5 += c.counts.n_c5;
  into.counts.n_mm += c.counts.n_mm;
  into.counts.n_std += c.counts.n_std;
  for (const auto& [kind, e] : c.plotting.by_kind) {
    auto [it, inserted] = into.plotting.by_kind.try_emplace(kind, e);
    if (!inserted) it->second += e;
  }
  into.plotting.total += c.plotting.total;
  into.e_farm += c.e_farm;
  into.e_op += c.e_op;
  into.c_elec += c.c_elec;
  into.c_emb_ssd += c.c_emb_ssd;
  into.c_emb_gpu_devices += c.c_emb_gpu_devices;
  into.c_emb_nogpu_devices += c.c_emb_nogpu_devices;
  into.c_emb_hdd += c.c_emb_hdd;
  into.c_emb += c.c_emb;
  into.c_total += c.c_total;
}

std::vector<ResolvedCohort> resolved(const Scenario& s) {
  require_valid(s);
  std::vector<ResolvedCohort> out;
  out.reserve(s.cohorts.size());
  for (const auto& c : s.cohorts) out.push_back(resolve(c, s.params));
  return out;
}

}  // namespace

std::vector<CohortAllocation> partition_netspace(const Scenario& s) {
  std::vector<CohortAllocation> out;
  for (const auto& c : resolved(s)) out.push_back(allocate(c, s.params));
  return out;
}

PlotCounts plot_counts(const CohortAllocation& a, const ParameterSet& p) {
  double c5_size = p.s_plot_c5.in(DataUnit::TiB);
  double plot_size = p.s_plot.in(DataUnit::TiB);
  if (!(c5_size > 0.0) || !(plot_size > 0.0)) throw InputError("degenerate plot size");
  return {a.s_c5.in(DataUnit::TiB) / c5_size, a.s_mm.in(DataUnit::TiB) / plot_size,
          a.s_std.in(DataUnit::TiB) / plot_size};
}

PlottingEnergy plotting_energy(const ResolvedCohort& c, const PlotCounts& n) {
  const double split = c.bb_gpu_split;
  const std::pair<PlotterKind, double> plots[] = {
      {PlotterKind::BladebitRam, n.n_c5 * (1.0 - split)},
      {PlotterKind::BladebitGpu, n.n_c5 * split},
      {PlotterKind::MadMax, n.n_mm},
      {PlotterKind::Standard, n.n_std},
  };
  PlottingEnergy out;
  for (const auto& [kind, count] : plots) {
    if (count == 0.0) {
      out.by_kind.emplace(kind, kwh(0.0));
      continue;
    }
    auto it = c.profiles.find(kind);
    if (it == c.profiles.end()) {
      throw InputError("cohort." + c.name, "missing profile for plotter " + std::string(to_string(kind)));
    }
    Energy e = it->second.per_plot_energy.to(EnergyUnit::kWh) * (count * c.pue.value());
    out.by_kind.emplace(kind, e);
    out.total += e;
  }
  return out;
}

Energy farming_energy(const ResolvedCohort& c, std::int64_t n_node_total) {
  return c.farm_energy_per_node_year.to(EnergyUnit::kWh) * (node_count(c, n_node_total) * c.pue.value());
}

Energy operational_energy(const Scenario& s) {
  Energy total = kwh(0.0);
  for (const auto& c : resolved(s)) {
    PlotCounts n = plot_counts(allocate(c, s.params), s.params);
    total += plotting_energy(c, n).total + farming_energy(c, s.params.n_node);
  }
  return total;
}

CarbonMass electricity_carbon(const Energy& e_op, const CarbonIntensity& i) { return e_op * i; }

CarbonMass embodied_ssd(const Scenario& s) {
  CarbonMass total = kg(0.0);
  for (const auto& c : resolved(s)) {
    total += ssd_wear(c, plot_counts(allocate(c, s.params), s.params), s.params);
  }
  return total;
}

DeviceEmbodied embodied_devices(const Scenario& s) {
  DeviceEmbodied total;
  for (const auto& c : resolved(s)) {
    DeviceEmbodied d = devices(c, s.params);
    total.gpu += d.gpu;
    total.nogpu += d.nogpu;
  }
  return total;
}

CarbonMass embodied_hdd(const Scenario& s) {
  CarbonMass total = kg(0.0);
  for (const auto& c : resolved(s)) total += hdd_stock(allocate(c, s.params), s.params);
  return total;
}

EmissionsBreakdown total_emissions(const Scenario& s) {
  EmissionsBreakdown out;
  out.scenario = s.name;
  out.network.name = "network";
  out.network.allocation.cohort = "network";
  for (const auto& c : resolved(s)) {
    out.cohorts.push_back(evaluate(c, s.params));
    accumulate(out.network, out.cohorts.back());
  }
  return out;
}

Energy bottom_up_total(std::span<const DeviceProfile> devices) {
  Energy total = kwh(0.0);
  for (const auto& d : devices) {
    total += d.energy.to(EnergyUnit::kWh) * (static_cast<double>(d.count) * d.pue.value());
  }
  return total;
}

Energy top_down_total(double hashes_per_second, double joules_per_hash, const Pue& pue,
                      const DurationYears& duration) {
  Power draw(detail::require_non_negative(hashes_per_second, "hash rate") *
             detail::require_non_negative(joules_per_hash, "energy per hash") * pue.value());
  return draw * duration;
}

}  // namespace postfoot
