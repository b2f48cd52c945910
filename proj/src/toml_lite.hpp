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
#include <string_view>

#include "json.hpp"

namespace postfoot::toml_lite {

// Reads the TOML subset used by scenario files into a JSON value:
// `key = value` pairs, [table] and [[array-of-tables]] headers, inline tables,
// arrays, basic strings, integers, floats, booleans and # comments.
// Syntax errors throw InputError naming `origin` and the line.
nlohmann::json parse(std::string_view text, const std::string& origin);

}  // namespace postfoot::toml_lite
