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

#include "postfoot/errors.hpp"
#include "postfoot/parameters.hpp"
#include "postfoot/scenario_io.hpp"
#include "test_support.hpp"

using namespace postfoot;

TEST_CASE("presets survive TOML and JSON round trips") {
  for (auto s : table3_scenarios()) {
    s.params.provenance["gamma_hdd"] = Provenance::Assumed;
    auto toml = scenario_to_toml(s);
    auto json = scenario_to_json(s);
    CHECK_MESSAGE(parse_scenario(toml, ScenarioSyntax::Toml, "rt.toml") == s, toml);
    CHECK_MESSAGE(parse_scenario(json, ScenarioSyntax::Json, "rt.json") == s, json);
  }
}

TEST_CASE("overrides patch a preset") {
  auto s = parse_scenario(R"(
preset = "method2"   # baseline
[global]
i_elec = 0.2
e_plot_mm = 900.0
[[cohort]]
name = "desktop"
pue = 1.3
mix = { bladebit = 0.1, madmax = 0.5, standard = 0.4 }
)",
                          ScenarioSyntax::Toml, "t.toml");
  CHECK(s.name == "method2");
  CHECK(s.params.i_elec.kg_per_kwh() == 0.2);
  CHECK(s.params.e_plot_mm.in(EnergyUnit::Wh) == 900.0);
  CHECK(s.params.provenance.at("i_elec") == Provenance::Literature);
  CHECK(s.cohorts.size() == 3);
  CHECK(s.cohorts[1].pue->value() == 1.3);
  CHECK(s.cohorts[1].mix->madmax.value() == 0.5);
}

TEST_CASE("no preset and no cohorts patches method1") {
  auto s = parse_scenario("{\"global\": {\"gamma_ssd\": 320}}", ScenarioSyntax::Json, "j.json");
  CHECK(s.cohorts == method1_scenario().cohorts);
  CHECK(s.params.gamma_ssd == 320.0);
}

TEST_CASE("scenario file errors carry their locus") {
  auto fails_with = [](std::string_view text, std::string_view needle) {
    try {
      parse_scenario(text, ScenarioSyntax::Toml, "f.toml");
    } catch (const InputError& e) {
      std::string what = e.what();
      CHECK_MESSAGE(what.find(needle) != std::string::npos, what);
      return;
    }
    FAIL("no error for: " << text);
  };
  fails_with("colour = 1", "f.toml: colour");
  fails_with("[global]\nnope = 1", "global.nope");
  fails_with("[global]\ni_elec = \"high\"", "expected a number");
  fails_with("[global]\npue_server = 0.5", "PUE must be >= 1");
  fails_with("[global]\nf_std = 0.2", "mix sums to");
  fails_with("[[cohort]]\npue = 1.2", "cohort needs a name");
  fails_with("x = [1, 2", "f.toml:1");
  fails_with("preset = \"method9\"", "method9");
  CHECK_THROWS_AS(load_scenario("does/not/exist.toml"), InputError);
}

TEST_CASE("override files") {
  auto text = overrides_to_toml({{"e_plot_mm", 927.634}, {"t_writes_bb", 0.08234}}, "from runs");
  auto s = parse_scenario(text, ScenarioSyntax::Toml, "o.toml");
  CHECK(s.params.e_plot_mm.in(EnergyUnit::Wh) == 927.634);
  CHECK(s.params.t_writes_bb.in(DataUnit::TiB) == 0.08234);
  CHECK(s.params.provenance.at("e_plot_mm") == Provenance::Empirical);
}
