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

#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "postfoot/quantities.hpp"

namespace postfoot {

struct ChainRecord {
  std::string name;
  CarbonMass annual_emissions;  // Mt
};

struct EquivalenceFactors {
  double car_t_per_year = 4.6;
};

CarbonMass claim_to_emissions(const Energy& annual_energy, const CarbonIntensity& i);
double ratio(const CarbonMass& a, const CarbonMass& b);
double car_equivalents(const CarbonMass& m, const EquivalenceFactors& f = {});

// Annual emissions of PoS chains and Bitcoin, in Mt CO2.
std::vector<ChainRecord> builtin_chains();

// CSV with header `name,annual_mtco2`.
std::vector<ChainRecord> parse_chain_dataset(std::istream& in, const std::string& origin);
std::vector<ChainRecord> load_chain_dataset(const std::filesystem::path& path);

// Reads `chains.csv` from $POSTFOOT_DATA_DIR when set, else the compiled-in table.
std::vector<ChainRecord> default_chain_dataset();

struct ComparisonRow {
  std::string name;
  double mt_co2 = 0.0;
  bool has_log = false;  // false for zero emissions
  double log10_mt = 0.0;
};

// Datasets plus labeled model results, descending by emissions, ties by name.
std::vector<ComparisonRow> emit_comparison(const std::vector<ChainRecord>& records,
                                           const std::vector<std::pair<std::string, CarbonMass>>& chia_results);
std::string comparison_csv(const std::vector<ComparisonRow>& rows);

}  // namespace postfoot
