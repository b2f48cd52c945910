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
#include <vector>

#include "postfoot/kernels.hpp"
#include "test_support.hpp"

using namespace postfoot::kernels;

TEST_CASE("parallel trapezoid matches the serial reference") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> w(0.0, 1200.0);
  for (std::size_t n : {2u, 3u, 63u, 64u, 65u, 1000u, 100003u}) {
    std::vector<double> t(n), p(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = 0.25 * static_cast<double>(i);
      p[i] = w(rng);
    }
    CAPTURE(n);
    CHECK_REL(trapezoid_wh_parallel(t, p), trapezoid_wh_serial(t, p), 1e-12);
    CHECK(trapezoid_wh_parallel(t, p) == trapezoid_wh_parallel(t, p));
  }
}

TEST_CASE("trapezoid of a constant trace") {
  std::vector<double> t = {0.0, 1800.0, 3600.0};
  std::vector<double> p = {250.0, 250.0, 250.0};
  CHECK(trapezoid_wh_serial(t, p) == 250.0);
  CHECK(trapezoid_wh_parallel(t, p) == 250.0);
}
