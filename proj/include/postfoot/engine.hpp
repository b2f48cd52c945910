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
#include <span>
#include <string>
#include <vector>

#include "postfoot/parameters.hpp"
#include "postfoot/quantities.hpp"

namespace postfoot {

// Netspace assigned to one cohort: yearly growth split by plotter family,
// plus the cohort's share of the standing netspace.
struct CohortAllocation {
  std::string cohort;
  DataSize s_c5 = tib(0.0);
  DataSize s_mm = tib(0.0);
  DataSize s_std = tib(0.0);
  DataSize s_stock = tib(0.0);
};

// Fractional plot counts; netspace is continuous so nothing is rounded.
struct PlotCounts {
  double n_c5 = 0.0;
  double n_mm = 0.0;
  double n_std = 0.0;
};

struct PlottingEnergy {
  std::map<PlotterKind, Energy> by_kind;
  Energy total = kwh(0.0);
};

struct DeviceEmbodied {
  CarbonMass gpu = kg(0.0);
  CarbonMass nogpu = kg(0.0);
};

struct CohortBreakdown {
  std::string name;
  CohortAllocation allocation;
  PlotCounts counts;
  PlottingEnergy plotting;
  Energy e_farm = kwh(0.0);
  Energy e_op = kwh(0.0);
  CarbonMass c_elec = kg(0.0);
  CarbonMass c_emb_ssd = kg(0.0);
  CarbonMass c_emb_gpu_devices = kg(0.0);
  CarbonMass c_emb_nogpu_devices = kg(0.0);
  CarbonMass c_emb_hdd = kg(0.0);
  CarbonMass c_emb = kg(0.0);
  CarbonMass c_total = kg(0.0);
};

struct EmissionsBreakdown {
  std::string scenario;
  std::vector<CohortBreakdown> cohorts;
  CohortBreakdown network;  // component-wise sum over cohorts
};

std::vector<CohortAllocation> partition_netspace(const Scenario& s);
PlotCounts plot_counts(const CohortAllocation& a, const ParameterSet& p);
PlottingEnergy plotting_energy(const ResolvedCohort& c, const PlotCounts& n);
Energy farming_energy(const ResolvedCohort& c, std::int64_t n_node_total);
Energy operational_energy(const Scenario& s);
CarbonMass electricity_carbon(const Energy& e_op, const CarbonIntensity& i);
CarbonMass embodied_ssd(const Scenario& s);
DeviceEmbodied embodied_devices(const Scenario& s);
CarbonMass embodied_hdd(const Scenario& s);
EmissionsBreakdown total_emissions(const Scenario& s);

// Generic fleet estimators.
struct DeviceProfile {
  Energy energy = kwh(0.0);
  Pue pue;
  std::uint64_t count = 0;
};

// Sum of count x per-device energy x PUE.
Energy bottom_up_total(std::span<const DeviceProfile> devices);

// Network rate x energy per operation x PUE, held for `duration`.
Energy top_down_total(double hashes_per_second, double joules_per_hash, const Pue& pue,
                      const DurationYears& duration);

}  // namespace postfoot
