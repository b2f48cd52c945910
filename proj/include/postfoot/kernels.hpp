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

#include <span>

namespace postfoot::kernels {

// Trapezoidal integral of a sampled power trace, in watt-hours.
// `t_s` holds strictly increasing timestamps in seconds, `p_w` the matching
// power samples in watts. Both spans have the same length >= 2.
//
// The parallel form splits the segments into a fixed number of blocks, sums
// each block on its own thread and adds the block sums in block order, so the
// result does not depend on the thread count. The serial form is the
// reference the tests and benchmarks compare against.
double trapezoid_wh_serial(std::span<const double> t_s, std::span<const double> p_w);
double trapezoid_wh_parallel(std::span<const double> t_s, std::span<const double> p_w);

inline constexpr int kTrapezoidBlocks = 64;

}  // namespace postfoot::kernels
