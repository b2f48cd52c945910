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

#include "postfoot/kernels.hpp"

#include <array>
#include <cstddef>

namespace postfoot::kernels {

namespace {

constexpr double kSecondsPerHour = 3600.0;

double segment_sum(std::span<const double> t, std::span<const double> p, std::size_t first, std::size_t last) {
  double acc = 0.0;
  for (std::size_t i = first; i < last; ++i) {
    acc += 0.5 * (p[i] + p[i + 1]) * (t[i + 1] - t[i]);
  }
  return acc;
}

}  // namespace

double trapezoid_wh_serial(std::span<const double> t_s, std::span<const double> p_w) {
  if (t_s.size() < 2) return 0.0;
  return segment_sum(t_s, p_w, 0, t_s.size() - 1) / kSecondsPerHour;
}

double trapezoid_wh_parallel(std::span<const double> t_s, std::span<const double> p_w) {
  if (t_s.size() < 2) return 0.0;
  const std::size_t segments = t_s.size() - 1;
  std::array<double, kTrapezoidBlocks> partial{};

#pragma omp parallel for schedule(static)
  for (int b = 0; b < kTrapezoidBlocks; ++b) {
    std::size_t first = segments * static_cast<std::size_t>(b) / kTrapezoidBlocks;
    std::size_t last = segments * static_cast<std::size_t>(b + 1) / kTrapezoidBlocks;
    partial[static_cast<std::size_t>(b)] = segment_sum(t_s, p_w, first, last);
  }

  double total = 0.0;
  for (double v : partial) total += v;
  return total / kSecondsPerHour;
}

}  // namespace postfoot::kernels
