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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "postfoot/parameters.hpp"

namespace postfoot {

enum class ScenarioSyntax { Toml, Json };

// Scenario files select an optional built-in `preset`, override global
// symbols under [global] (values in each symbol's registry unit), and add or
// patch cohorts with [[cohort]] blocks matched by name. With
// `replace_cohorts = true` the file's cohorts replace the preset's. With no
// preset and no cohorts the file patches method1.
Scenario parse_scenario(std::string_view text, ScenarioSyntax syntax, const std::string& origin);
Scenario load_scenario(const std::filesystem::path& path);

// Full, self-contained renderings; loading them reproduces an equal Scenario.
std::string scenario_to_json(const Scenario& s);
std::string scenario_to_toml(const Scenario& s);

// A [global]-only override file, keyed by registry symbol.
std::string overrides_to_toml(const std::map<std::string, double>& overrides, const std::string& comment);

}  // namespace postfoot
