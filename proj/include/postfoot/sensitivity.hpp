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

#include <optional>
#include <string>
#include <vector>

#include "postfoot/engine.hpp"
#include "postfoot/parameters.hpp"

namespace postfoot {

EmissionsBreakdown run_preset(std::string_view name);

struct SensitivityRow {
  std::string scenario;
  CarbonMass c_total;
  std::string key_variation;
  double embodied_share = 0.0;  // c_emb / c_total
};

// One row per scenario, ascending by c_total.
std::vector<SensitivityRow> sensitivity_report(const std::vector<Scenario>& scenarios);
std::vector<SensitivityRow> table3_report();

struct SweepSpec {
  std::string path;
  std::vector<double> values;
};

struct SweepRow {
  double value = 0.0;
  std::optional<CarbonMass> c_total;
  std::optional<CarbonMass> c_elec;
  std::optional<CarbonMass> c_emb;
  std::string error;  // set when the value breaks an invariant; totals are then empty
};

// Rows come back in input order. The base scenario is never modified. A bad
// path throws InputError before any row is evaluated; a bad value only marks
// its own row.
std::vector<SweepRow> sweep(const Scenario& base, const SweepSpec& spec);
std::vector<SweepRow> sweep_serial(const Scenario& base, const SweepSpec& spec);

std::string sweep_csv(const std::vector<SweepRow>& rows);

enum class Metric { Total, Electricity, Embodied };

inline constexpr double kDefaultRelativeDelta = 1e-3;

// (dC/C)/(dp/p) by symmetric difference around the current value of `path`.
double elasticity(const Scenario& s, std::string_view path, double relative_delta = kDefaultRelativeDelta,
                  Metric metric = Metric::Total);

}  // namespace postfoot
