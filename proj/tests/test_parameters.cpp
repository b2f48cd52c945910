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

#include <set>

#include "postfoot/errors.hpp"
#include "postfoot/parameters.hpp"
#include "test_support.hpp"

using namespace postfoot;

namespace {

bool has_violation(const ValidationReport& r, std::string_view needle) {
  for (const auto& v : r) {
    if ((v.path + ": " + v.message).find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("default parameter set") {
  auto p = default_parameter_set();
  CHECK(p.n_node == 250000);
  CHECK(p.s_net.in(DataUnit::EiB) == 33.8465);
  CHECK(p.e_plot_c5_ram.in(EnergyUnit::Wh) == 165.637);
  CHECK(p.e_farm_server.in(EnergyUnit::kWh) == 6761.283);
  CHECK(p.pue_server.value() == 1.58);
  CHECK(p.i_elec.kg_per_kwh() == 0.384);
  CHECK(p.f_bb.value() + p.f_mm.value() + p.f_std.value() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("provenance is total over the registry") {
  auto p = default_parameter_set();
  std::set<std::string> names;
  for (const auto& spec : parameter_registry()) {
    names.insert(std::string(spec.name));
    REQUIRE(p.provenance.contains(std::string(spec.name)));
    CHECK(p.provenance.at(std::string(spec.name)) == spec.default_provenance);
  }
  CHECK(p.provenance.size() == names.size());
  CHECK(p.provenance.at("e_plot_mm") == Provenance::Empirical);
  CHECK(p.provenance.at("t_writes_bb") == Provenance::Empirical);
  CHECK(p.provenance.at("i_elec") == Provenance::Literature);
  CHECK(p.provenance.at("f_allocation") == Provenance::Assumed);
}

TEST_CASE("registry get/set round trip in registry units") {
  for (const auto& spec : parameter_registry()) {
    auto p = default_parameter_set();
    double v = spec.get(p);
    double bumped = spec.name == "n_node" ? v + 1.0 : v * 0.5 + (spec.name.starts_with("pue") ? 0.5 : 0.0);
    if (spec.name.starts_with("f_")) bumped = v * 0.5;
    spec.set(p, bumped);
    CHECK_MESSAGE(spec.get(p) == doctest::Approx(bumped).epsilon(1e-12), spec.name);
  }
  CHECK(find_parameter("e_farm") == find_parameter("e_farm_server"));
  CHECK(find_parameter("nope") == nullptr);
  auto p = default_parameter_set();
  CHECK_THROWS_AS(find_parameter("n_node")->set(p, 2.5), InputError);
  CHECK_THROWS_AS(find_parameter("pue_server")->set(p, 0.5), InputError);
}

TEST_CASE("presets validate") {
  CHECK(preset_names().size() == 5);
  for (const auto& s : table3_scenarios()) {
    CHECK_MESSAGE(validate(s).empty(), s.name, ": ", format_report(validate(s)));
  }
  CHECK_THROWS_AS(preset_scenario("method3"), InputError);
  CHECK(preset_scenario("method2") == method2_scenario());
}

TEST_CASE("mix and share sum rejections") {
  SUBCASE("global mix") {
    auto s = method1_scenario();
    s.params.f_std = Fraction(0.2);
    CHECK(has_violation(validate(s), "mix sums to 1.1"));
    CHECK_THROWS_AS(require_valid(s), InputError);
  }
  SUBCASE("cohort mix") {
    auto s = method2_scenario();
    s.cohorts[1].mix->standard = Fraction(0.5);
    CHECK(has_violation(validate(s), "cohort.desktop.mix: mix sums to 1.1"));
  }
  SUBCASE("node shares") {
    auto s = method2_scenario();
    s.cohorts[0].node_share = Fraction(0.2);
    CHECK(has_violation(validate(s), "node_share sums to 1.05"));
  }
  SUBCASE("netspace shares") {
    auto s = method2_scenario();
    s.cohorts[2].netspace_share = Fraction(0.0);
    CHECK(has_violation(validate(s), "netspace_share sums to 0.95"));
  }
  SUBCASE("sums within 1e-9 pass") {
    auto s = method2_scenario();
    s.cohorts[0].node_share = Fraction(0.15 + 1e-10);
    CHECK(validate(s).empty());
  }
  SUBCASE("duplicate names") {
    auto s = method2_scenario();
    s.cohorts[2].name = "desktop";
    CHECK(has_violation(validate(s), "duplicate cohort name"));
  }
  SUBCASE("missing profile") {
    auto s = method2_scenario();
    s.cohorts[2].mix = PlotMix{Fraction(0.1), Fraction(0.15), Fraction(0.75)};
    CHECK(has_violation(validate(s), "missing profile"));
  }
}

TEST_CASE("cohort inheritance") {
  auto s = method2_scenario();
  const auto& p = s.params;
  auto server = resolve(s.cohorts[0], p);
  CHECK(server.pue.value() == 1.58);
  CHECK(server.chassis_kg == 1000.0);
  CHECK(server.profiles.at(PlotterKind::MadMax).per_plot_energy == p.e_plot_mm);
  CHECK(server.profiles.at(PlotterKind::BladebitGpu).compressed);
  CHECK(server.profiles.at(PlotterKind::BladebitGpu).plot_size == p.s_plot_c5);
  CHECK(!server.profiles.at(PlotterKind::Standard).compressed);
  auto laptop = resolve(s.cohorts[2], p);
  CHECK(laptop.pue.value() == 1.0);
  CHECK(!laptop.profiles.contains(PlotterKind::BladebitRam));
}

TEST_CASE("dot paths") {
  auto s = method2_scenario();
  CHECK(get_path(s, "global.i_elec") == 0.384);
  CHECK(get_path(s, "cohort.desktop.pue") == 1.2);
  CHECK(get_path(s, "cohort.server.pue") == 1.58);  // inherited
  set_path(s, "cohort.desktop.pue", 1.4);
  CHECK(s.cohorts[1].pue->value() == 1.4);
  set_path(s, "global.e_plot_mm", 1000.0);
  CHECK(s.params.e_plot_mm.in(EnergyUnit::Wh) == 1000.0);
  set_path(s, "cohort.laptop.plot_energy_kwh.standard", 1.5);
  CHECK(get_path(s, "cohort.laptop.plot_energy_kwh.standard") == 1.5);
  CHECK_THROWS_AS(get_path(s, "global.nope"), InputError);
  CHECK_THROWS_AS(get_path(s, "cohort.phone.pue"), InputError);
  CHECK_THROWS_AS(get_path(s, "cohort.server.colour"), InputError);
  CHECK_THROWS_AS(get_path(s, "pue"), InputError);
  CHECK_THROWS_AS(set_path(s, "cohort.server.pue", 0.5), InputError);
  for (auto field : cohort_numeric_fields()) {
    CHECK_NOTHROW(get_path(s, "cohort.desktop." + std::string(field)));
  }
}
