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

#include <string>

namespace postfoot::fmt {

// Shortest decimal text that parses back to exactly `v`.
std::string exact(double v);

// Fixed-point with `decimals` places and comma thousands separators.
std::string grouped(double v, int decimals = 3);

// At most `significant` significant digits, trailing zeros trimmed.
std::string compact(double v, int significant = 12);

std::string csv_escape(const std::string& s);

}  // namespace postfoot::fmt
