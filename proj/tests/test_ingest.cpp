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

#include <random>
#include <sstream>

#include "postfoot/errors.hpp"
#include "postfoot/ingest.hpp"
#include "test_support.hpp"

using namespace postfoot;

namespace {

std::string error_of(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_power_log(in, "log.csv");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

const std::string kFix = POSTFOOT_FIXTURES;

}  // namespace

TEST_CASE("power log parsing") {
  std::istringstream in("timestamp_s,power_w\n0,100\n3600,100\n");
  auto s = parse_power_log(in, "log.csv");
  CHECK(s.size() == 2);
  CHECK(integrate_power(s).in(EnergyUnit::Wh) == 100.0);
  CHECK(integrate_power_serial(s).in(EnergyUnit::Wh) == 100.0);

  CHECK(error_of("timestamp_s,power_w\n0,1\n10,1\n5,1\n").find("log.csv:4") == 0);
  CHECK(error_of("timestamp_s,power_w\n0,1\n10,1\n5,1\n").find("non-monotonic") != std::string::npos);
  CHECK(error_of("timestamp_s,power_w\n0,1\n10\n").find("log.csv:3") == 0);
  CHECK(error_of("timestamp_s,power_w\n0,abc\n").find("power_w") != std::string::npos);
  CHECK(error_of("").find("empty file") != std::string::npos);
  CHECK(error_of("timestamp_s,power_w\n").find("empty file") != std::string::npos);
  CHECK(error_of("t,p\n0,1\n").find("expected header") != std::string::npos);
  CHECK(error_of("timestamp_s,power_w\n0,-3\n").find("negative") != std::string::npos);
  CHECK_THROWS_AS(parse_power_log("no/such/file.csv"), InputError);

  std::istringstream one("timestamp_s,power_w\n0,5\n");
  CHECK_THROWS_AS(integrate_power(parse_power_log(one, "x")), InputError);
}

TEST_CASE("farming capture fixture") {
  auto s = parse_power_log(kFix + "/farm_power.csv");
  auto e = integrate_power(s);
  CHECK_REL(e.in(EnergyUnit::Wh), 771.836, 1e-12);
  CHECK_REL(annualize(e, 60.0).in(EnergyUnit::kWh), 6761.28336, 1e-9);
  CHECK_THROWS_AS(annualize(e, 0.0), InputError);
}

TEST_CASE("trapezoid additivity over a split point") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dt(0.1, 5.0);
  std::uniform_real_distribution<double> w(0.0, 900.0);
  std::vector<double> t = {0.0};
  std::vector<double> p = {w(rng)};
  for (int i = 1; i < 5000; ++i) {
    t.push_back(t.back() + dt(rng));
    p.push_back(w(rng));
  }
  PowerSeries s(t, p);
  for (std::size_t k : {std::size_t{1}, std::size_t{17}, std::size_t{2500}, std::size_t{4998}}) {
    double whole = integrate_power_serial(s).in(EnergyUnit::Wh);
    double parts = integrate_power_serial(s.slice(0, k)).in(EnergyUnit::Wh) +
                   integrate_power_serial(s.slice(k, s.size() - 1)).in(EnergyUnit::Wh);
    CHECK_REL(parts, whole, 1e-12);
  }
  CHECK_REL(integrate_power(s).in(EnergyUnit::Wh), integrate_power_serial(s).in(EnergyUnit::Wh), 1e-12);
}

TEST_CASE("diskstats") {
  auto before = parse_diskstats(kFix + "/diskstats_before.txt");
  auto after = parse_diskstats(kFix + "/diskstats_after.txt");
  REQUIRE(before.size() == 3);
  const auto& a = find_device(before, "sda", "b");
  const auto& b = find_device(after, "sda", "a");
  CHECK(writes_delta(a, b).in(DataUnit::TiB) == 1.0);
  CHECK(writes_delta(a, a).in(DataUnit::TiB) == 0.0);
  CHECK(writes_delta(b, b).in(DataUnit::TiB) == 0.0);
  CHECK(writes_delta(a, b, 4096).in(DataUnit::TiB) == 8.0);
  CHECK_THROWS_AS(writes_delta(b, a), InputError);
  CHECK_THROWS_AS(writes_delta(a, find_device(after, "sdb", "a")), InputError);
  CHECK_THROWS_AS(find_device(before, "sdz", "b"), InputError);

  DiskCounters huge{"sda", 0};
  DiskCounters huger{"sda", ~std::uint64_t{0}};
  CHECK_REL(writes_delta(huge, huger).in(DataUnit::TiB), 18446744073709551615.0 * 512.0 / 1099511627776.0, 1e-15);

  std::istringstream short_line("8 0 sda 1 2 3\n");
  CHECK_THROWS_WITH_AS(parse_diskstats(short_line, "d"), doctest::Contains("d:1"), InputError);
  std::istringstream junk("8 0 sda 1 2 3 4 5 6 x7 8 9 10 11\n");
  CHECK_THROWS_WITH_AS(parse_diskstats(junk, "d"), doctest::Contains("field 10"), InputError);
}

TEST_CASE("run records reproduce the table means") {
  auto runs = parse_runs(kFix + "/table1_runs.csv");
  auto means = run_means(runs);
  REQUIRE(means.size() == 5);
  CHECK(means.at("standard").energy.in(EnergyUnit::Wh) == 4995.0485);
  CHECK(means.at("madmax").energy.in(EnergyUnit::Wh) == 927.634);
  CHECK(means.at("bladebit_ram").energy.in(EnergyUnit::Wh) == 165.637);
  CHECK(means.at("bladebit_gpu").energy.in(EnergyUnit::Wh) == 85.968);
  CHECK(means.at("farming").energy.in(EnergyUnit::Wh) == 771.836);
  CHECK(means.at("standard").duration_min == 379.02);
  CHECK(means.at("bladebit_gpu").writes.in(DataUnit::TiB) == 0.0813125);

  auto o = derive_plotter_profile(runs);
  CHECK(o.at("e_plot_std") == 4995.0485 / 1000.0);
  CHECK(o.at("e_plot_mm") == 927.634);
  CHECK(o.at("e_plot_c5_ram") == 165.637);
  CHECK(o.at("e_plot_c5_gpu") == 85.968);
  CHECK(o.at("t_writes_std") == 1.64);
  CHECK(o.at("t_writes_mm") == 1.357);
  CHECK_REL(o.at("t_writes_bb"), (6 * 0.083376 + 8 * 0.0813125) / 14.0, 1e-12);
  CHECK_REL(o.at("e_farm_server"), 6761.28336, 1e-9);

  auto p = default_parameter_set();
  apply_overrides(p, o);
  CHECK(p.e_plot_mm.in(EnergyUnit::Wh) == 927.634);
  CHECK(p.provenance.at("e_farm_server") == Provenance::Empirical);

  CHECK_THROWS_AS(derive_plotter_profile({}), InputError);
  CHECK_THROWS_AS(derive_plotter_profile({RunRecord{"gpu_miner", 1.0, wh(1.0), tib(0.0)}}), InputError);
  std::istringstream bad("label,duration_min,energy_wh,writes_tib\nmadmax,0,1,1\n");
  CHECK_THROWS_WITH_AS(parse_runs(bad, "r"), doctest::Contains("r:2"), InputError);
}
