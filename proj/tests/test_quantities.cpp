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

#include "postfoot/quantities.hpp"
#include "test_support.hpp"

using namespace postfoot;

template <class A, class B>
concept Addable = requires(A a, B b) { a + b; };

static_assert(Addable<DataSize, DataSize>);
static_assert(!Addable<DataSize, Energy>);
static_assert(!Addable<Energy, CarbonMass>);
static_assert(!Addable<CarbonMass, DataSize>);

TEST_CASE("binary data prefixes") {
  CHECK(eib(1.0).in(DataUnit::TiB) == 1048576.0);
  CHECK(tib(1.0).in(DataUnit::GiB) == 1024.0);
  CHECK_REL(eib(12.6593).in(DataUnit::TiB) * 0.6, 7964542.894, 1e-9);
  CHECK_REL(gib(81.3).in(DataUnit::TiB), 0.0793945312, 1e-9);
}

TEST_CASE("mass conversions") {
  CHECK_REL(kg(1096467223.9).in(MassUnit::t), 1096467.224, 1e-9);
  CHECK_REL(tonnes(1326509.261).in(MassUnit::Mt), 1.326509261, 1e-9);
  CHECK(kg(0.0).in(MassUnit::Mt) == 0.0);
}

TEST_CASE("round trips between every unit pair") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> exponent(-6.0, 12.0);
  const DataUnit du[] = {DataUnit::GiB, DataUnit::TiB, DataUnit::EiB};
  const EnergyUnit eu[] = {EnergyUnit::Wh, EnergyUnit::kWh, EnergyUnit::MWh, EnergyUnit::TWh};
  const MassUnit mu[] = {MassUnit::kg, MassUnit::t, MassUnit::Mt};
  for (int i = 0; i < 200; ++i) {
    double v = std::pow(10.0, exponent(rng));
    for (auto a : du)
      for (auto b : du) CHECK_REL(DataSize(v, a).to(b).in(a), v, 1e-12);
    for (auto a : eu)
      for (auto b : eu) CHECK_REL(Energy(v, a).to(b).in(a), v, 1e-12);
    for (auto a : mu)
      for (auto b : mu) CHECK_REL(CarbonMass(v, a).to(b).in(a), v, 1e-12);
  }
}

TEST_CASE("arithmetic stays in the left operand's unit") {
  auto s = tib(1.0) + gib(512.0);
  CHECK(s.unit() == DataUnit::TiB);
  CHECK(s.value() == 1.5);
  CHECK(kwh(1.0) == wh(1000.0));
  CHECK(kwh(2.0) / wh(500.0) == 4.0);
  CHECK(tonnes(1.0) > kg(999.0));
}

TEST_CASE("power times duration") {
  CHECK(Power(1.0) * DurationYears::from_hours(1.0) == wh(1.0));
  CHECK((Power(100.0) * DurationYears(1.0)).in(EnergyUnit::kWh) == 876.0);
  CHECK((kwh(1000.0) * CarbonIntensity(0.384)).in(MassUnit::kg) == 384.0);
}

TEST_CASE("constructors reject bad magnitudes") {
  CHECK_THROWS_AS(tib(-1.0), InputError);
  CHECK_THROWS_AS(kwh(std::nan("")), InputError);
  CHECK_THROWS_AS(kg(INFINITY), InputError);
  CHECK_THROWS_AS(Pue(0.99), InputError);
  CHECK_THROWS_AS(Fraction(1.01), InputError);
  CHECK_THROWS_AS(Fraction(-0.01), InputError);
  CHECK_THROWS_AS(DurationYears(0.0), InputError);
  CHECK_THROWS_AS(Power(-5.0), InputError);
  CHECK_THROWS_AS(CarbonIntensity(-0.1), InputError);
  CHECK_THROWS_AS(tib(1.0) - tib(2.0), InputError);
  CHECK_NOTHROW(Pue(1.0));
}
