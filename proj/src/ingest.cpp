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

#include "postfoot/ingest.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "postfoot/errors.hpp"
#include "postfoot/format.hpp"
#include "postfoot/kernels.hpp"

namespace postfoot {

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string locus(const std::string& origin, int line) { return origin + ":" + std::to_string(line); }

double parse_real(std::string_view tok, const std::string& where, std::string_view column) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size() || !std::isfinite(v)) {
    throw InputError(where, std::string(column) + ": not a number: '" + std::string(tok) + "'");
  }
  return v;
}

std::uint64_t parse_counter(std::string_view tok, const std::string& where, int field) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw InputError(where, "field " + std::to_string(field) + ": non-numeric counter '" + std::string(tok) + "'");
  }
  return v;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string(), "file not found");
  return in;
}

// Reads a CSV whose first non-blank line must equal `header`; calls `row` with
// the 1-based line number and the split fields of every data line.
template <class Fn>
void read_csv(std::istream& in, const std::string& origin, std::string_view header, std::size_t columns,
              Fn&& row) {
  std::string line;
  int line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (view.empty() || view.front() == '#') continue;
    if (!seen_header) {
      if (view != header) {
        throw InputError(locus(origin, line_no), "expected header '" + std::string(header) + "'");
      }
      seen_header = true;
      continue;
    }
    auto fields = split_commas(view);
    if (fields.size() != columns) {
      throw InputError(locus(origin, line_no), "malformed line: expected " + std::to_string(columns) +
                                                   " fields, got " + std::to_string(fields.size()));
    }
    row(line_no, fields);
  }
  if (!seen_header) throw InputError(origin, "empty file");
}

}  // namespace

PowerSeries::PowerSeries(std::vector<double> t_s, std::vector<double> p_w)
    : t_s_(std::move(t_s)), p_w_(std::move(p_w)) {
  if (t_s_.size() != p_w_.size()) throw InputError("power series: timestamp and power counts differ");
  for (std::size_t i = 0; i < p_w_.size(); ++i) {
    detail::require_non_negative(p_w_[i], "power");
    if (i > 0 && !(t_s_[i] > t_s_[i - 1])) {
      throw InputError("power series sample " + std::to_string(i) + ": timestamps must be strictly increasing");
    }
  }
}

PowerSeries PowerSeries::slice(std::size_t first, std::size_t last) const {
  return PowerSeries(std::vector<double>(t_s_.begin() + static_cast<long>(first), t_s_.begin() + static_cast<long>(last) + 1),
                     std::vector<double>(p_w_.begin() + static_cast<long>(first), p_w_.begin() + static_cast<long>(last) + 1));
}

PowerSeries parse_power_log(std::istream& in, const std::string& origin) {
  std::vector<double> t;
  std::vector<double> p;
  read_csv(in, origin, "timestamp_s,power_w", 2, [&](int line_no, const auto& f) {
    std::string where = locus(origin, line_no);
    double ts = parse_real(f[0], where, "timestamp_s");
    double w = parse_real(f[1], where, "power_w");
    if (w < 0.0) throw InputError(where, "power_w: negative power");
    if (!t.empty() && !(ts > t.back())) {
      throw InputError(where, "non-monotonic timestamp " + fmt::exact(ts) + " after " + fmt::exact(t.back()));
    }
    t.push_back(ts);
    p.push_back(w);
  });
  if (t.empty()) throw InputError(origin, "empty file: no samples");
  return PowerSeries(std::move(t), std::move(p));
}

PowerSeries parse_power_log(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_power_log(in, path.string());
}

Energy integrate_power(const PowerSeries& s) {
  if (s.size() < 2) throw InputError("power series needs at least 2 samples to integrate");
  return wh(kernels::trapezoid_wh_parallel(s.timestamps(), s.watts()));
}

Energy integrate_power_serial(const PowerSeries& s) {
  if (s.size() < 2) throw InputError("power series needs at least 2 samples to integrate");
  return wh(kernels::trapezoid_wh_serial(s.timestamps(), s.watts()));
}

std::vector<DiskCounters> parse_diskstats(std::istream& in, const std::string& origin) {
  std::vector<DiskCounters> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string f; fields >> f;) tok.push_back(f);
    if (tok.empty()) continue;
    std::string where = locus(origin, line_no);
    if (tok.size() < 11) {
      throw InputError(where, "short line: expected at least 11 fields, got " + std::to_string(tok.size()));
    }
    parse_counter(tok[0], where, 1);
    parse_counter(tok[1], where, 2);
    DiskCounters c;
    c.device = tok[2];
    c.reads_completed = parse_counter(tok[3], where, 4);
    c.sectors_read = parse_counter(tok[5], where, 6);
    c.writes_completed = parse_counter(tok[7], where, 8);
    c.sectors_written = parse_counter(tok[9], where, 10);
    for (std::size_t i = 10; i < tok.size(); ++i) parse_counter(tok[i], where, static_cast<int>(i) + 1);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<DiskCounters> parse_diskstats(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_diskstats(in, path.string());
}

const DiskCounters& find_device(const std::vector<DiskCounters>& snapshot, const std::string& device,
                                const std::string& origin) {
  for (const auto& c : snapshot) {
    if (c.device == device) return c;
  }
  throw InputError(origin, "device '" + device + "' not present in snapshot");
}

DataSize writes_delta(const DiskCounters& before, const DiskCounters& after, std::uint64_t sector_bytes) {
  if (before.device != after.device) {
    throw InputError("device mismatch: '" + before.device + "' vs '" + after.device + "'");
  }
  if (after.sectors_written < before.sectors_written) {
    throw InputError(after.device, "sectors_written went backwards (counter wrap or reboot); re-capture both snapshots");
  }
  if (sector_bytes == 0) throw InputError("sector size must be positive");
  const std::uint64_t sectors = after.sectors_written - before.sectors_written;
  // Whole TiB and remainder kept apart so large deltas stay exact.
  constexpr std::uint64_t kTiB = std::uint64_t{1} << 40;
  const unsigned __int128 bytes = static_cast<unsigned __int128>(sectors) * sector_bytes;
  const auto whole = static_cast<double>(static_cast<std::uint64_t>(bytes / kTiB));
  const auto rest = static_cast<double>(static_cast<std::uint64_t>(bytes % kTiB));
  return tib(whole + rest / static_cast<double>(kTiB));
}

Energy annualize(const Energy& e, double duration_minutes) {
  if (!(std::isfinite(duration_minutes) && duration_minutes > 0.0)) {
    throw InputError("annualize: duration must be positive, got " + fmt::compact(duration_minutes));
  }
  constexpr double kMinutesPerYear = 8760.0 * 60.0;
  return e * (kMinutesPerYear / duration_minutes);
}

std::vector<RunRecord> parse_runs(std::istream& in, const std::string& origin) {
  std::vector<RunRecord> out;
  read_csv(in, origin, "label,duration_min,energy_wh,writes_tib", 4, [&](int line_no, const auto& f) {
    std::string where = locus(origin, line_no);
    RunRecord r;
    r.label = std::string(f[0]);
    if (r.label.empty()) throw InputError(where, "label: empty");
    r.duration_min = parse_real(f[1], where, "duration_min");
    if (!(r.duration_min > 0.0)) throw InputError(where, "duration_min: must be positive");
    double e = parse_real(f[2], where, "energy_wh");
    double w = parse_real(f[3], where, "writes_tib");
    if (e < 0.0 || w < 0.0) throw InputError(where, "energy_wh and writes_tib must be non-negative");
    r.energy = wh(e);
    r.writes = tib(w);
    out.push_back(std::move(r));
  });
  return out;
}

std::vector<RunRecord> parse_runs(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_runs(in, path.string());
}

std::map<std::string, RunMean> run_means(const std::vector<RunRecord>& runs) {
  struct Sum {
    double energy_wh = 0.0;
    double writes_tib = 0.0;
    double minutes = 0.0;
    int n = 0;
  };
  std::map<std::string, Sum> sums;
  for (const auto& r : runs) {
    auto& s = sums[r.label];
    s.energy_wh += r.energy.in(EnergyUnit::Wh);
    s.writes_tib += r.writes.in(DataUnit::TiB);
    s.minutes += r.duration_min;
    ++s.n;
  }
  std::map<std::string, RunMean> out;
  for (const auto& [label, s] : sums) {
    out[label] = {s.n, s.minutes / s.n, wh(s.energy_wh / s.n), tib(s.writes_tib / s.n)};
  }
  return out;
}

std::map<std::string, double> derive_plotter_profile(const std::vector<RunRecord>& runs) {
  if (runs.empty()) throw InputError("no runs to derive parameters from");
  for (const auto& r : runs) {
    if (r.label != "farming" && !plotter_kind_from_string(r.label)) {
      throw InputError("run label '" + r.label +
                       "' is unknown (expected standard, madmax, bladebit_ram, bladebit_gpu or farming)");
    }
  }

  std::map<std::string, double> out;
  const auto means = run_means(runs);
  for (const auto& [label, m] : means) {
    const double e = m.energy.in(EnergyUnit::Wh);
    const double w = m.writes.in(DataUnit::TiB);
    if (label == "standard") {
      out["e_plot_std"] = e / 1000.0;
      out["t_writes_std"] = w;
    } else if (label == "madmax") {
      out["e_plot_mm"] = e;
      out["t_writes_mm"] = w;
    } else if (label == "bladebit_ram") {
      out["e_plot_c5_ram"] = e;
    } else if (label == "bladebit_gpu") {
      out["e_plot_c5_gpu"] = e;
    } else if (label == "farming") {
      out["e_farm_server"] = annualize(m.energy, m.duration_min).in(EnergyUnit::kWh);
    }
  }
  // One write figure covers both Bladebit modes: the mean over all their runs.
  double bb_writes = 0.0;
  int bb_runs = 0;
  for (const char* label : {"bladebit_ram", "bladebit_gpu"}) {
    if (auto it = means.find(label); it != means.end()) {
      bb_writes += it->second.writes.in(DataUnit::TiB) * it->second.runs;
      bb_runs += it->second.runs;
    }
  }
  if (bb_runs > 0) out["t_writes_bb"] = bb_writes / bb_runs;
  return out;
}

void apply_overrides(ParameterSet& p, const std::map<std::string, double>& overrides) {
  for (const auto& [name, v] : overrides) {
    const ParameterSpec* spec = find_parameter(name);
    if (spec == nullptr) throw InputError("unknown parameter '" + name + "'");
    spec->set(p, v);
    p.provenance[std::string(spec->name)] = Provenance::Empirical;
  }
}

}  // namespace postfoot
