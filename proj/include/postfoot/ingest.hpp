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
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "postfoot/parameters.hpp"
#include "postfoot/quantities.hpp"

namespace postfoot {

// Sampled wattmeter trace. Timestamps are strictly increasing seconds.
class PowerSeries {
 public:
  PowerSeries() = default;
  // Throws InputError if timestamps are not strictly increasing.
  PowerSeries(std::vector<double> t_s, std::vector<double> p_w);

  std::size_t size() const { return t_s_.size(); }
  const std::vector<double>& timestamps() const { return t_s_; }
  const std::vector<double>& watts() const { return p_w_; }
  double duration_s() const { return size() < 2 ? 0.0 : t_s_.back() - t_s_.front(); }

  // Samples [first, last] inclusive, sharing the boundary sample with neighbours.
  PowerSeries slice(std::size_t first, std::size_t last) const;

 private:
  std::vector<double> t_s_;
  std::vector<double> p_w_;
};

// CSV with header `timestamp_s,power_w`.
PowerSeries parse_power_log(std::istream& in, const std::string& origin);
PowerSeries parse_power_log(const std::filesystem::path& path);

Energy integrate_power(const PowerSeries& s);
Energy integrate_power_serial(const PowerSeries& s);

struct DiskCounters {
  std::string device;
  std::uint64_t sectors_written = 0;
  std::uint64_t reads_completed = 0;
  std::uint64_t sectors_read = 0;
  std::uint64_t writes_completed = 0;
};

// Kernel diskstats text: field 3 is the device, field 10 the sectors written.
std::vector<DiskCounters> parse_diskstats(std::istream& in, const std::string& origin);
std::vector<DiskCounters> parse_diskstats(const std::filesystem::path& path);
const DiskCounters& find_device(const std::vector<DiskCounters>& snapshot, const std::string& device,
                                const std::string& origin);

inline constexpr std::uint64_t kSectorBytes = 512;

DataSize writes_delta(const DiskCounters& before, const DiskCounters& after,
                      std::uint64_t sector_bytes = kSectorBytes);

// Scale an energy measured over `duration_minutes` to a full year.
Energy annualize(const Energy& e, double duration_minutes);

struct RunRecord {
  std::string label;  // plotter kind key or "farming"
  double duration_min = 0.0;
  Energy energy = wh(0.0);
  DataSize writes = tib(0.0);
};

// CSV with header `label,duration_min,energy_wh,writes_tib`.
std::vector<RunRecord> parse_runs(std::istream& in, const std::string& origin);
std::vector<RunRecord> parse_runs(const std::filesystem::path& path);

struct RunMean {
  int runs = 0;
  double duration_min = 0.0;
  Energy energy = wh(0.0);
  DataSize writes = tib(0.0);
};

// Per-label arithmetic means, keyed by label.
std::map<std::string, RunMean> run_means(const std::vector<RunRecord>& runs);

// Means per label, expressed as global parameter overrides in registry units
// (e.g. e_plot_std in kWh, e_plot_mm in Wh, t_writes_* in TiB, e_farm_server
// annualized in kWh). Throws for unknown labels.
std::map<std::string, double> derive_plotter_profile(const std::vector<RunRecord>& runs);

// Applies overrides through the registry and marks them empirical.
void apply_overrides(ParameterSet& p, const std::map<std::string, double>& overrides);

}  // namespace postfoot
