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

#include "postfoot/compare.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "postfoot/errors.hpp"
#include "postfoot/format.hpp"

namespace postfoot {

CarbonMass claim_to_emissions(const Energy& annual_energy, const CarbonIntensity& i) {
  return (annual_energy * i).to(MassUnit::Mt);
}

double ratio(const CarbonMass& a, const CarbonMass& b) {
  if (!(b.value() > 0.0)) throw InputError("ratio: zero denominator");
  return a / b;
}

double car_equivalents(const CarbonMass& m, const EquivalenceFactors& f) {
  if (!(f.car_t_per_year > 0.0)) throw InputError("car factor must be positive");
  return m.in(MassUnit::t) / f.car_t_per_year;
}

std::vector<ChainRecord> builtin_chains() {
  const std::pair<const char*, double> table[] = {
      {"Bitcoin", 92.2},
      {"Algorand", 0.000389},
      {"Tezos", 0.000075},
      {"Celo", 0.000010319},
      {"Cardano", 0.000172},
      {"Polkadot", 0.000309},
      {"Avalanche", 0.001146367},
      {"Solana", 0.005279701},
      {"Ethereum-PoS", 0.001313},
  };
  std::vector<ChainRecord> out;
  for (const auto& [name, mt] : table) out.push_back({name, megatonnes(mt)});
  return out;
}

std::vector<ChainRecord> parse_chain_dataset(std::istream& in, const std::string& origin) {
  std::vector<ChainRecord> out;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::string where = origin + ":" + std::to_string(line_no);
    if (!header) {
      if (line != "name,annual_mtco2") throw InputError(where, "expected header 'name,annual_mtco2'");
      header = true;
      continue;
    }
    auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw InputError(where, "malformed line: expected 2 fields");
    }
    std::string name = line.substr(0, comma);
    std::string num = line.substr(comma + 1);
    double v = 0.0;
    auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (name.empty() || ec != std::errc{} || p != num.data() + num.size()) {
      throw InputError(where, "malformed line");
    }
    if (v < 0.0) throw InputError(where, "negative emissions for '" + name + "'");
    if (!seen.insert(name).second) throw InputError(where, "duplicate chain name '" + name + "'");
    out.push_back({name, megatonnes(v)});
  }
  if (!header) throw InputError(origin, "empty file");
  return out;
}

std::vector<ChainRecord> load_chain_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string(), "file not found");
  return parse_chain_dataset(in, path.string());
}

std::vector<ChainRecord> default_chain_dataset() {
  if (const char* dir = std::getenv("POSTFOOT_DATA_DIR"); dir != nullptr && *dir != '\0') {
    return load_chain_dataset(std::filesystem::path(dir) / "chains.csv");
  }
  return builtin_chains();
}

std::vector<ComparisonRow> emit_comparison(const std::vector<ChainRecord>& records,
                                           const std::vector<std::pair<std::string, CarbonMass>>& chia_results) {
  std::vector<ComparisonRow> rows;
  auto add = [&](const std::string& name, const CarbonMass& m) {
    ComparisonRow r;
    r.name = name;
    r.mt_co2 = m.in(MassUnit::Mt);
    r.has_log = r.mt_co2 > 0.0;
    if (r.has_log) r.log10_mt = std::log10(r.mt_co2);
    rows.push_back(std::move(r));
  };
  for (const auto& c : records) add(c.name, c.annual_emissions);
  for (const auto& [label, m] : chia_results) add(label, m);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.mt_co2 != b.mt_co2) return a.mt_co2 > b.mt_co2;
    return a.name < b.name;
  });
  return rows;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "name,mt_co2,log10_mt\n";
  for (const auto& r : rows) {
    out << fmt::csv_escape(r.name) << ',' << fmt::exact(r.mt_co2) << ',';
    if (r.has_log) out << fmt::exact(r.log10_mt);
    out << '\n';
  }
  return out.str();
}

}  // namespace postfoot
