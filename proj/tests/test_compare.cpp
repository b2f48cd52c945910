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

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "postfoot/compare.hpp"
#include "postfoot/errors.hpp"
#include "postfoot/scenario_io.hpp"
#include "postfoot/sensitivity.hpp"
#include "test_support.hpp"

using namespace postfoot;

TEST_CASE("claim conversion, ratios and equivalents") {
  auto claim = claim_to_emissions(twh(0.13), CarbonIntensity(0.384));
  CHECK_REL(claim.in(MassUnit::Mt), 0.04992, 1e-12);
  CHECK_REL(ratio(megatonnes(1.3265), claim), 26.57, 1e-3);
  CHECK_REL(ratio(megatonnes(0.884), claim), 17.71, 1e-3);
  CHECK(ratio(claim, claim) == 1.0);
  CHECK_THROWS_AS(ratio(claim, kg(0.0)), InputError);
  CHECK_REL(car_equivalents(megatonnes(0.884)), 192174.0, 1e-5);
  CHECK(car_equivalents(tonnes(4.6)) == doctest::Approx(1.0));
  CHECK(car_equivalents(kg(0.0)) == 0.0);
  CHECK_THROWS_AS(car_equivalents(kg(1.0), {0.0}), InputError);

  for (double i : {0.01, 0.384, 0.9}) {
    auto a = claim_to_emissions(twh(3.0), CarbonIntensity(i));
    auto b = claim_to_emissions(twh(0.5), CarbonIntensity(i));
    CHECK_REL(ratio(a, b), 6.0, 1e-12);
  }
}

TEST_CASE("chain datasets") {
  auto builtin = builtin_chains();
  CHECK(builtin.size() == 9);
  auto from_file = load_chain_dataset(std::string(POSTFOOT_SOURCE_DIR) + "/data/chains.csv");
  REQUIRE(from_file.size() == builtin.size());
  for (std::size_t i = 0; i < builtin.size(); ++i) {
    CHECK(from_file[i].name == builtin[i].name);
    CHECK(from_file[i].annual_emissions == builtin[i].annual_emissions);
  }
  std::istringstream header_only("name,annual_mtco2\n");
  CHECK(parse_chain_dataset(header_only, "h").empty());
  std::istringstream dup("name,annual_mtco2\nTezos,1\nTezos,2\n");
  CHECK_THROWS_WITH_AS(parse_chain_dataset(dup, "d"), doctest::Contains("duplicate"), InputError);
  std::istringstream neg("name,annual_mtco2\nX,-1\n");
  CHECK_THROWS_WITH_AS(parse_chain_dataset(neg, "n"), doctest::Contains("negative"), InputError);
  std::istringstream bad("name,annual_mtco2\nX,1,2\n");
  CHECK_THROWS_WITH_AS(parse_chain_dataset(bad, "b"), doctest::Contains("b:2"), InputError);
}

TEST_CASE("comparison rows") {
  auto rows = emit_comparison(builtin_chains(), {{"Chia (method2)", run_preset("method2").network.c_total}});
  REQUIRE(rows.size() == 10);
  CHECK(rows[0].name == "Bitcoin");
  CHECK(rows[1].name == "Chia (method2)");
  CHECK(rows[2].name == "Solana");
  CHECK_REL(rows[0].log10_mt, 1.9647, 1e-4);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].mt_co2 >= rows[i].mt_co2);

  auto zero = emit_comparison({{"B", kg(0.0)}, {"A", kg(0.0)}}, {});
  CHECK(zero[0].name == "A");
  CHECK(!zero[0].has_log);
  CHECK(comparison_csv(zero) == "name,mt_co2,log10_mt\nA,0,\nB,0,\n");
  CHECK(emit_comparison({{"only", megatonnes(1.0)}}, {}).size() == 1);
}

TEST_CASE("tiered estimates exceed every proof-of-stake chain by two orders") {
  auto calibrated = load_scenario(std::string(POSTFOOT_SOURCE_DIR) + "/scenarios/method2_calibrated.toml");
  const double floor_mt = 0.584;
  const double m2 = total_emissions(calibrated).network.c_total.in(MassUnit::Mt);
  for (const auto& c : builtin_chains()) {
    if (c.name == "Bitcoin") continue;
    const double other = c.annual_emissions.in(MassUnit::Mt);
    if (c.name != "Solana") CHECK_MESSAGE(floor_mt / other > 100.0, c.name);
    CHECK_MESSAGE(m2 / other > 100.0, c.name);
  }
}
