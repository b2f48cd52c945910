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

#include "postfoot/scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "postfoot/errors.hpp"
#include "postfoot/format.hpp"
#include "toml_lite.hpp"

namespace postfoot {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

double number_at(const json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(where, "wrong type, expected a number");
  return v.get<double>();
}

std::string string_at(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where, "wrong type, expected a string");
  return v.get<std::string>();
}

const json& object_at(const json& v, const std::string& where) {
  if (!v.is_object()) throw InputError(where, "wrong type, expected a table");
  return v;
}

void apply_cohort(Cohort& c, const ParameterSet& p, const json& block, const std::string& where) {
  for (const auto& [key, v] : block.items()) {
    std::string at = where + "." + key;
    if (key == "name") continue;
    if (key == "profile_source") {
      std::string src = string_at(v, at);
      if (src == "measured") c.profile_source = ProfileSource::Measured;
      else if (src == "explicit") c.profile_source = ProfileSource::Explicit;
      else throw InputError(at, "expected \"measured\" or \"explicit\"");
      continue;
    }
    if (key == "mix" || key == "plot_energy_kwh") {
      if (key == "mix" && !c.mix) c.mix = PlotMix{Fraction(0.0), Fraction(0.0), Fraction(0.0)};
      for (const auto& [part, pv] : object_at(v, at).items()) {
        std::string field = key + "." + part;
        try {
          set_cohort_field(c, p, field, number_at(pv, at + "." + part));
        } catch (const InputError& e) {
          std::string msg = e.what();
          if (msg.starts_with(at)) throw;
          throw InputError(at + "." + part, msg);
        }
      }
      continue;
    }
    double num = number_at(v, at);
    try {
      set_cohort_field(c, p, key, num);
    } catch (const InputError& e) {
      std::string msg = e.what();
      if (msg.rfind("unknown cohort field") != std::string::npos) throw InputError(at, "unknown key");
      throw InputError(at, msg);
    }
  }
}

Scenario from_document(const json& doc, const std::string& origin) {
  object_at(doc, origin);
  static const std::set<std::string> kTopLevel = {"preset",  "name",       "description", "replace_cohorts",
                                                  "global",  "provenance", "cohort"};
  for (const auto& [key, _] : doc.items()) {
    if (!kTopLevel.contains(key)) throw InputError(origin + ": " + key, "unknown key");
  }

  const bool has_cohorts = doc.contains("cohort");
  Scenario s;
  if (doc.contains("preset")) {
    s = preset_scenario(string_at(doc["preset"], origin + ": preset"));
  } else if (has_cohorts) {
    s.name = "custom";
    s.params = default_parameter_set();
  } else {
    s = method1_scenario();
  }
  if (doc.contains("name")) s.name = string_at(doc["name"], origin + ": name");
  if (doc.contains("description")) s.description = string_at(doc["description"], origin + ": description");

  if (doc.contains("global")) {
    for (const auto& [key, v] : object_at(doc["global"], origin + ": global").items()) {
      std::string at = origin + ": global." + key;
      const ParameterSpec* spec = find_parameter(key);
      if (spec == nullptr) throw InputError(at, "unknown key");
      double num = number_at(v, at);
      try {
        spec->set(s.params, num);
      } catch (const InputError& e) {
        throw InputError(at, e.what());
      }
    }
  }

  if (doc.contains("provenance")) {
    for (const auto& [key, v] : object_at(doc["provenance"], origin + ": provenance").items()) {
      std::string at = origin + ": provenance." + key;
      const ParameterSpec* spec = find_parameter(key);
      if (spec == nullptr) throw InputError(at, "unknown key");
      std::string tag = string_at(v, at);
      Provenance pv;
      if (tag == "empirical") pv = Provenance::Empirical;
      else if (tag == "literature") pv = Provenance::Literature;
      else if (tag == "assumed") pv = Provenance::Assumed;
      else throw InputError(at, "expected empirical, literature or assumed");
      s.params.provenance[std::string(spec->name)] = pv;
    }
  }

  if (has_cohorts) {
    const json& blocks = doc["cohort"];
    if (!blocks.is_array()) throw InputError(origin + ": cohort", "wrong type, expected [[cohort]] blocks");
    bool replace = false;
    if (doc.contains("replace_cohorts")) {
      if (!doc["replace_cohorts"].is_boolean()) {
        throw InputError(origin + ": replace_cohorts", "wrong type, expected a boolean");
      }
      replace = doc["replace_cohorts"].get<bool>();
    }
    if (replace) s.cohorts.clear();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      std::string where = origin + ": cohort[" + std::to_string(i) + "]";
      const json& block = object_at(blocks[i], where);
      if (!block.contains("name")) throw InputError(where, "cohort needs a name");
      std::string name = string_at(block["name"], where + ".name");
      Cohort* target = nullptr;
      for (auto& c : s.cohorts) {
        if (c.name == name) target = &c;
      }
      if (target == nullptr) {
        s.cohorts.push_back(Cohort{});
        target = &s.cohorts.back();
        target->name = name;
      }
      apply_cohort(*target, s.params, block, where);
    }
  }

  auto report = validate(s);
  if (!report.empty()) throw InputError(origin, "invalid scenario: " + format_report(report));
  return s;
}

ordered_json cohort_json(const Cohort& c) {
  ordered_json j;
  j["name"] = c.name;
  j["node_share"] = c.node_share.value();
  j["netspace_share"] = c.netspace_share.value();
  if (c.pue) j["pue"] = c.pue->value();
  if (c.mix) {
    j["mix"] = {{"bladebit", c.mix->bladebit.value()},
                {"madmax", c.mix->madmax.value()},
                {"standard", c.mix->standard.value()}};
  }
  j["bb_gpu_split"] = c.bb_gpu_split.value();
  if (c.gpu_node_split) j["gpu_node_split"] = c.gpu_node_split->value();
  j["profile_source"] = c.profile_source == ProfileSource::Measured ? "measured" : "explicit";
  if (!c.plot_energy.empty()) {
    ordered_json e = ordered_json::object();
    for (const auto& [kind, energy] : c.plot_energy) e[std::string(to_string(kind))] = energy.in(EnergyUnit::kWh);
    j["plot_energy_kwh"] = e;
  }
  if (c.farm_energy_per_node_year) j["farm_kwh_per_node_year"] = c.farm_energy_per_node_year->in(EnergyUnit::kWh);
  if (c.embodied_chassis_kg) j["embodied_chassis_kg"] = *c.embodied_chassis_kg;
  if (c.embodied_gpu_kg) j["embodied_gpu_kg"] = *c.embodied_gpu_kg;
  j["ram_gib"] = c.ram_gib;
  j["bladebit_ram_gib"] = c.bladebit_ram_gib;
  if (c.ssd_tbw) j["ssd_tbw_tib"] = c.ssd_tbw->in(DataUnit::TiB);
  return j;
}

ordered_json scenario_document(const Scenario& s) {
  ordered_json doc;
  doc["name"] = s.name;
  doc["description"] = s.description;
  doc["replace_cohorts"] = true;
  ordered_json g = ordered_json::object();
  ordered_json prov = ordered_json::object();
  for (const auto& spec : parameter_registry()) {
    std::string key(spec.name);
    g[key] = spec.get(s.params);
    if (auto it = s.params.provenance.find(key); it != s.params.provenance.end()) {
      prov[key] = std::string(to_string(it->second));
    }
  }
  doc["global"] = g;
  doc["provenance"] = prov;
  ordered_json cohorts = ordered_json::array();
  for (const auto& c : s.cohorts) cohorts.push_back(cohort_json(c));
  doc["cohort"] = cohorts;
  return doc;
}

std::string toml_value(const ordered_json& v) {
  if (v.is_string()) {
    std::string out = "\"";
    for (char c : v.get<std::string>()) {
      if (c == '"' || c == '\\') out += '\\';
      if (c == '\n') {
        out += "\\n";
        continue;
      }
      out += c;
    }
    return out + "\"";
  }
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_object()) {
    std::string out = "{ ";
    bool first = true;
    for (const auto& [k, inner] : v.items()) {
      if (!first) out += ", ";
      first = false;
      out += k + " = " + toml_value(inner);
    }
    return out + " }";
  }
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  return fmt::exact(v.get<double>());
}

}  // namespace

Scenario parse_scenario(std::string_view text, ScenarioSyntax syntax, const std::string& origin) {
  json doc;
  if (syntax == ScenarioSyntax::Json) {
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError(origin, std::string("malformed JSON: ") + e.what());
    }
  } else {
    doc = toml_lite::parse(text, origin);
  }
  return from_document(doc, origin);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string(), "file not found");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  bool is_json = path.extension() == ".json" || (first != std::string::npos && text[first] == '{');
  return parse_scenario(text, is_json ? ScenarioSyntax::Json : ScenarioSyntax::Toml, path.string());
}

std::string scenario_to_json(const Scenario& s) { return scenario_document(s).dump(2) + "\n"; }

std::string scenario_to_toml(const Scenario& s) {
  ordered_json doc = scenario_document(s);
  std::ostringstream out;
  for (const char* key : {"name", "description", "replace_cohorts"}) {
    out << key << " = " << toml_value(doc[key]) << "\n";
  }
  for (const char* table : {"global", "provenance"}) {
    out << "\n[" << table << "]\n";
    for (const auto& [k, v] : doc[table].items()) out << k << " = " << toml_value(v) << "\n";
  }
  for (const auto& c : doc["cohort"]) {
    out << "\n[[cohort]]\n";
    for (const auto& [k, v] : c.items()) out << k << " = " << toml_value(v) << "\n";
  }
  return out.str();
}

std::string overrides_to_toml(const std::map<std::string, double>& overrides, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "[global]\n";
  for (const auto& [k, v] : overrides) out << k << " = " << fmt::exact(v) << "\n";
  out << "\n[provenance]\n";
  for (const auto& [k, _] : overrides) out << k << " = \"empirical\"\n";
  return out.str();
}

}  // namespace postfoot
