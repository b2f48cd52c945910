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

// postfoot: command-line front end for the footprint model.
//
//   postfoot estimate  --preset method1 [--format table|csv|json]
//   postfoot scenarios [--evaluate] [--params]
//   postfoot sweep     --preset method1 --param global.i_elec --values 0,0.384
//   postfoot ingest    power|diskstats|runs ...
//   postfoot compare   [--against chains.csv] [--include-estimates method1,method2] [--claim 0.13TWh]
//
// Exit codes: 0 success, 2 input or validation error, 3 internal invariant breach.

#include <charconv>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "postfoot/compare.hpp"
#include "postfoot/engine.hpp"
#include "postfoot/errors.hpp"
#include "postfoot/format.hpp"
#include "postfoot/ingest.hpp"
#include "postfoot/parameters.hpp"
#include "postfoot/scenario_io.hpp"
#include "postfoot/sensitivity.hpp"

namespace pf = postfoot;
using nlohmann::ordered_json;

namespace {

enum class Format { Table, Csv, Json };

const std::map<std::string, Format> kFormats = {
    {"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};

struct Common {
  Format format = Format::Table;
  bool stamp = false;
};

std::string utc_stamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

void stamp_line(const Common& c, std::ostream& out) {
  if (c.stamp && c.format != Format::Json) out << "# generated " << utc_stamp() << "\n";
}

void stamp_json(const Common& c, ordered_json& j) {
  if (c.stamp) j["generated"] = utc_stamp();
}

// Ordered key/value output shared by the ingest commands.
struct Record {
  std::vector<std::pair<std::string, double>> fields;
  void add(std::string key, double v) { fields.emplace_back(std::move(key), v); }
};

void print_record(const Record& r, const Common& c, std::ostream& out) {
  switch (c.format) {
    case Format::Table: {
      stamp_line(c, out);
      std::size_t width = 0;
      for (const auto& [k, _] : r.fields) width = std::max(width, k.size());
      for (const auto& [k, v] : r.fields) {
        out << std::left << std::setw(static_cast<int>(width)) << k << "  " << pf::fmt::grouped(v) << "\n";
      }
      break;
    }
    case Format::Csv:
      stamp_line(c, out);
      out << "key,value\n";
      for (const auto& [k, v] : r.fields) out << k << ',' << pf::fmt::exact(v) << "\n";
      break;
    case Format::Json: {
      ordered_json j = ordered_json::object();
      for (const auto& [k, v] : r.fields) j[k] = v;
      stamp_json(c, j);
      out << j.dump(2) << "\n";
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// Scenario source

struct ScenarioSource {
  std::string preset;
  std::string file;
};

void add_source_options(CLI::App* cmd, ScenarioSource& src) {
  auto* preset = cmd->add_option("--preset", src.preset, "Built-in scenario (see `postfoot scenarios`)");
  auto* file = cmd->add_option("--scenario", src.file, "Scenario file (TOML or JSON)");
  preset->excludes(file);
}

pf::Scenario resolve_source(const ScenarioSource& src) {
  if (!src.file.empty()) return pf::load_scenario(src.file);
  return pf::preset_scenario(src.preset.empty() ? "method1" : src.preset);
}

// Preset name, or a path when the item names an existing file or a .toml/.json file.
pf::Scenario scenario_from_item(const std::string& item) {
  std::filesystem::path p(item);
  if (std::filesystem::exists(p) || p.extension() == ".toml" || p.extension() == ".json") {
    return pf::load_scenario(p);
  }
  return pf::preset_scenario(item);
}

// ---------------------------------------------------------------------------
// estimate

struct Metric {
  const char* key;
  const char* unit;
  std::function<double(const pf::CohortBreakdown&)> get;
};

std::vector<Metric> breakdown_metrics() {
  using B = pf::CohortBreakdown;
  auto tib = [](const pf::DataSize& d) { return d.in(pf::DataUnit::TiB); };
  auto kwh = [](const pf::Energy& e) { return e.in(pf::EnergyUnit::kWh); };
  auto t = [](const pf::CarbonMass& m) { return m.in(pf::MassUnit::t); };
  auto kind = [kwh](pf::PlotterKind k) {
    return [kwh, k](const B& b) {
      auto it = b.plotting.by_kind.find(k);
      return it == b.plotting.by_kind.end() ? 0.0 : kwh(it->second);
    };
  };
  return {
      {"s_c5", "TiB", [tib](const B& b) { return tib(b.allocation.s_c5); }},
      {"s_mm", "TiB", [tib](const B& b) { return tib(b.allocation.s_mm); }},
      {"s_std", "TiB", [tib](const B& b) { return tib(b.allocation.s_std); }},
      {"s_stock", "TiB", [tib](const B& b) { return tib(b.allocation.s_stock); }},
      {"n_plot_c5", "plots", [](const B& b) { return b.counts.n_c5; }},
      {"n_plot_mm", "plots", [](const B& b) { return b.counts.n_mm; }},
      {"n_plot_std", "plots", [](const B& b) { return b.counts.n_std; }},
      {"e_plot_bladebit_ram", "kWh", kind(pf::PlotterKind::BladebitRam)},
      {"e_plot_bladebit_gpu", "kWh", kind(pf::PlotterKind::BladebitGpu)},
      {"e_plot_madmax", "kWh", kind(pf::PlotterKind::MadMax)},
      {"e_plot_standard", "kWh", kind(pf::PlotterKind::Standard)},
      {"e_plot", "kWh", [kwh](const B& b) { return kwh(b.plotting.total); }},
      {"e_farm", "kWh", [kwh](const B& b) { return kwh(b.e_farm); }},
      {"e_op", "kWh", [kwh](const B& b) { return kwh(b.e_op); }},
      {"c_elec", "t", [t](const B& b) { return t(b.c_elec); }},
      {"c_emb_ssd", "t", [t](const B& b) { return t(b.c_emb_ssd); }},
      {"c_emb_gpu", "t", [t](const B& b) { return t(b.c_emb_gpu_devices); }},
      {"c_emb_nogpu", "t", [t](const B& b) { return t(b.c_emb_nogpu_devices); }},
      {"c_emb_hdd", "t", [t](const B& b) { return t(b.c_emb_hdd); }},
      {"c_emb", "t", [t](const B& b) { return t(b.c_emb); }},
      {"c_total", "t", [t](const B& b) { return t(b.c_total); }},
  };
}

void print_breakdown(const pf::EmissionsBreakdown& b, const Common& c, std::ostream& out) {
  auto metrics = breakdown_metrics();
  std::vector<const pf::CohortBreakdown*> columns;
  for (const auto& cb : b.cohorts) columns.push_back(&cb);
  columns.push_back(&b.network);

  switch (c.format) {
    case Format::Table: {
      stamp_line(c, out);
      out << "scenario: " << b.scenario << "\n\n";
      std::vector<std::vector<std::string>> cells;
      std::vector<std::string> header = {"metric", "unit"};
      for (const auto* col : columns) header.push_back(col->name);
      cells.push_back(header);
      for (const auto& m : metrics) {
        std::vector<std::string> row = {m.key, m.unit};
        for (const auto* col : columns) row.push_back(pf::fmt::grouped(m.get(*col)));
        cells.push_back(row);
      }
      std::vector<std::size_t> width(header.size(), 0);
      for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i < 2) out << std::left; else out << std::right;
          out << std::setw(static_cast<int>(width[i])) << row[i] << (i + 1 < row.size() ? "  " : "\n");
        }
      }
      out << "\nC_total = " << pf::fmt::grouped(b.network.c_total.in(pf::MassUnit::Mt), 3) << " Mt CO2/yr\n";
      break;
    }
    case Format::Csv: {
      stamp_line(c, out);
      out << "metric,unit";
      for (const auto* col : columns) out << ',' << pf::fmt::csv_escape(col->name);
      out << "\n";
      for (const auto& m : metrics) {
        out << m.key << ',' << m.unit;
        for (const auto* col : columns) out << ',' << pf::fmt::exact(m.get(*col));
        out << "\n";
      }
      break;
    }
    case Format::Json: {
      auto block = [&](const pf::CohortBreakdown& cb) {
        ordered_json j;
        j["name"] = cb.name;
        for (const auto& m : metrics) j[std::string(m.key) + "_" + m.unit] = m.get(cb);
        return j;
      };
      ordered_json j;
      j["scenario"] = b.scenario;
      j["cohorts"] = ordered_json::array();
      for (const auto& cb : b.cohorts) j["cohorts"].push_back(block(cb));
      j["network"] = block(b.network);
      j["c_total_mt"] = b.network.c_total.in(pf::MassUnit::Mt);
      stamp_json(c, j);
      out << j.dump(2) << "\n";
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// scenarios

void print_scenarios(const Common& c, bool evaluate, std::ostream& out) {
  auto presets = pf::table3_scenarios();
  if (evaluate) {
    auto rows = pf::sensitivity_report(presets);
    switch (c.format) {
      case Format::Table:
        stamp_line(c, out);
        for (const auto& r : rows) {
          out << std::left << std::setw(28) << r.scenario << std::right << std::setw(8)
              << pf::fmt::grouped(r.c_total.in(pf::MassUnit::Mt)) << " Mt  embodied "
              << std::setw(5) << pf::fmt::grouped(100.0 * r.embodied_share, 1) << "%  " << r.key_variation
              << "\n";
        }
        break;
      case Format::Csv:
        stamp_line(c, out);
        out << "scenario,c_total_mt,embodied_share,key_variation\n";
        for (const auto& r : rows) {
          out << r.scenario << ',' << pf::fmt::exact(r.c_total.in(pf::MassUnit::Mt)) << ','
              << pf::fmt::exact(r.embodied_share) << ',' << pf::fmt::csv_escape(r.key_variation) << "\n";
        }
        break;
      case Format::Json: {
        ordered_json j = ordered_json::array();
        for (const auto& r : rows) {
          j.push_back({{"scenario", r.scenario},
                       {"c_total_mt", r.c_total.in(pf::MassUnit::Mt)},
                       {"embodied_share", r.embodied_share},
                       {"key_variation", r.key_variation}});
        }
        out << j.dump(2) << "\n";
        break;
      }
    }
    return;
  }
  switch (c.format) {
    case Format::Table:
      stamp_line(c, out);
      for (const auto& s : presets) out << std::left << std::setw(28) << s.name << s.description << "\n";
      break;
    case Format::Csv:
      stamp_line(c, out);
      out << "name,key_variation,cohorts\n";
      for (const auto& s : presets) {
        out << s.name << ',' << pf::fmt::csv_escape(s.description) << ',' << s.cohorts.size() << "\n";
      }
      break;
    case Format::Json: {
      ordered_json j = ordered_json::array();
      for (const auto& s : presets) {
        ordered_json names = ordered_json::array();
        for (const auto& co : s.cohorts) names.push_back(co.name);
        j.push_back({{"name", s.name}, {"key_variation", s.description}, {"cohorts", names}});
      }
      out << j.dump(2) << "\n";
      break;
    }
  }
}

void print_params(const Common& c, std::ostream& out) {
  auto p = pf::default_parameter_set();
  stamp_line(c, out);
  if (c.format == Format::Table) {
    for (const auto& spec : pf::parameter_registry()) {
      out << std::left << std::setw(16) << spec.name << std::setw(8) << spec.unit << std::setw(12)
          << pf::fmt::compact(spec.get(p)) << std::setw(12) << pf::to_string(spec.default_provenance)
          << spec.description << "\n";
    }
    return;
  }
  out << "name,unit,default,provenance,description\n";
  for (const auto& spec : pf::parameter_registry()) {
    out << spec.name << ',' << spec.unit << ',' << pf::fmt::exact(spec.get(p)) << ','
        << pf::to_string(spec.default_provenance) << ',' << pf::fmt::csv_escape(std::string(spec.description))
        << "\n";
  }
}

// ---------------------------------------------------------------------------
// helpers for flag values

std::vector<double> parse_values(const std::string& list) {
  std::vector<double> out;
  std::stringstream in(list);
  for (std::string tok; std::getline(in, tok, ',');) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size()) {
      throw pf::InputError("--values", "not a number: '" + tok + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw pf::InputError("--values", "no values given");
  return out;
}

pf::Energy parse_energy(const std::string& text) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{}) throw pf::InputError("--claim", "expected an energy such as 0.13TWh");
  std::string unit(p, text.data() + text.size());
  if (unit.empty() || unit == "TWh") return pf::twh(v);
  if (unit == "MWh") return {v, pf::EnergyUnit::MWh};
  if (unit == "kWh") return pf::kwh(v);
  if (unit == "Wh") return pf::wh(v);
  throw pf::InputError("--claim", "unknown energy unit '" + unit + "'");
}

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Footprint model for proof-of-space-and-time blockchains"};
  app.require_subcommand(1);
  Common common;
  std::string format_name = "table";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format: table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_flag("--stamp", common.stamp, "Add a generation timestamp to the output");
  };

  // estimate
  ScenarioSource est_src;
  auto* estimate = app.add_subcommand("estimate", "Evaluate a scenario and print the emissions breakdown");
  add_source_options(estimate, est_src);
  add_format(estimate);

  // scenarios
  bool evaluate = false;
  bool params = false;
  auto* scenarios = app.add_subcommand("scenarios", "List the built-in scenarios");
  scenarios->add_flag("--evaluate", evaluate, "Run every preset and list them by total emissions");
  scenarios->add_flag("--params", params, "List the global parameters with units and defaults");
  add_format(scenarios);

  // sweep
  ScenarioSource sweep_src;
  std::string sweep_param;
  std::string sweep_values;
  bool sweep_serial = false;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a scenario over a list of parameter values (CSV)");
  add_source_options(sweep, sweep_src);
  sweep->add_option("--param", sweep_param, "Parameter path, e.g. global.i_elec or cohort.desktop.pue")->required();
  sweep->add_option("--values", sweep_values, "Comma-separated values")->required();
  sweep->add_flag("--serial", sweep_serial, "Evaluate rows on one thread");
  sweep->add_flag("--stamp", common.stamp, "Add a generation timestamp to the output");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Derive model parameters from measurement logs");
  ingest->require_subcommand(1);
  std::string power_file;
  double annualize_min = 0.0;
  auto* ing_power = ingest->add_subcommand("power", "Integrate a wattmeter power log");
  ing_power->add_option("--file", power_file, "CSV with header timestamp_s,power_w")->required();
  auto* annualize_opt =
      ing_power->add_option("--annualize", annualize_min, "Capture length in minutes to scale to one year");
  add_format(ing_power);

  std::string before_file, after_file, device;
  std::uint64_t sector_bytes = pf::kSectorBytes;
  auto* ing_disk = ingest->add_subcommand("diskstats", "Disk writes between two diskstats snapshots");
  ing_disk->add_option("--before", before_file, "Snapshot taken before the run")->required();
  ing_disk->add_option("--after", after_file, "Snapshot taken after the run")->required();
  ing_disk->add_option("--device", device, "Block device name, e.g. sda")->required();
  ing_disk->add_option("--sector-size", sector_bytes, "Bytes per sector")->check(CLI::PositiveNumber);
  add_format(ing_disk);

  std::string runs_file, overrides_out;
  auto* ing_runs = ingest->add_subcommand("runs", "Average run records into parameter values");
  ing_runs->add_option("--file", runs_file, "CSV with header label,duration_min,energy_wh,writes_tib")->required();
  ing_runs->add_option("--emit-overrides", overrides_out, "Write a [global] override scenario file here");
  add_format(ing_runs);

  // compare
  std::string against, estimates, claim;
  double claim_intensity = pf::default_parameter_set().i_elec.kg_per_kwh();
  auto* compare = app.add_subcommand("compare", "Chart-ready comparison against other chains (CSV)");
  compare->add_option("--against", against, "Chain dataset CSV (name,annual_mtco2); default: built-in");
  compare->add_option("--include-estimates", estimates, "Comma-separated presets or scenario files to add");
  compare->add_option("--claim", claim, "Published annual energy to convert, e.g. 0.13TWh");
  compare->add_option("--intensity", claim_intensity, "Grid intensity for --claim in kg/kWh");
  compare->add_flag("--stamp", common.stamp, "Add a generation timestamp to the output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    throw pf::InputError(e.what());
  }
  common.format = kFormats.at(format_name);
  auto& out = std::cout;

  if (*estimate) {
    pf::Scenario s = resolve_source(est_src);
    auto report = pf::validate(s);
    if (!report.empty()) throw pf::InputError("scenario '" + s.name + "' is invalid", pf::format_report(report));
    print_breakdown(pf::total_emissions(s), common, out);
  } else if (*scenarios) {
    if (params) print_params(common, out);
    else print_scenarios(common, evaluate, out);
  } else if (*sweep) {
    pf::Scenario s = resolve_source(sweep_src);
    pf::require_valid(s);
    pf::SweepSpec spec{sweep_param, parse_values(sweep_values)};
    auto rows = sweep_serial ? pf::sweep_serial(s, spec) : pf::sweep(s, spec);
    if (common.stamp) out << "# generated " << utc_stamp() << "\n";
    out << pf::sweep_csv(rows);
    for (const auto& r : rows) {
      if (!r.error.empty()) std::cerr << "postfoot: warning: value " << pf::fmt::exact(r.value) << ": " << r.error << "\n";
    }
  } else if (*ing_power) {
    auto series = pf::parse_power_log(power_file);
    auto e = pf::integrate_power(series);
    Record r;
    r.add("samples", static_cast<double>(series.size()));
    r.add("duration_min", series.duration_s() / 60.0);
    r.add("energy_wh", e.in(pf::EnergyUnit::Wh));
    if (*annualize_opt) r.add("annual_kwh", pf::annualize(e, annualize_min).in(pf::EnergyUnit::kWh));
    print_record(r, common, out);
  } else if (*ing_disk) {
    auto before = pf::parse_diskstats(before_file);
    auto after = pf::parse_diskstats(after_file);
    auto d = pf::writes_delta(pf::find_device(before, device, before_file), pf::find_device(after, device, after_file),
                              sector_bytes);
    Record r;
    r.add("sectors_written",
          static_cast<double>(pf::find_device(after, device, after_file).sectors_written -
                              pf::find_device(before, device, before_file).sectors_written));
    r.add("writes_tib", d.in(pf::DataUnit::TiB));
    r.add("writes_gib", d.in(pf::DataUnit::GiB));
    print_record(r, common, out);
  } else if (*ing_runs) {
    auto runs = pf::parse_runs(runs_file);
    auto overrides = pf::derive_plotter_profile(runs);
    Record r;
    for (const auto& [k, v] : overrides) r.add(k, v);
    print_record(r, common, out);
    if (!overrides_out.empty()) {
      std::ofstream f(overrides_out);
      if (!f) throw pf::InputError(overrides_out, "cannot write overrides file");
      f << pf::overrides_to_toml(overrides, "derived from " + std::filesystem::path(runs_file).filename().string());
    }
  } else if (*compare) {
    auto records = against.empty() ? pf::default_chain_dataset() : pf::load_chain_dataset(against);
    std::vector<std::pair<std::string, pf::CarbonMass>> chia;
    for (const auto& item : split_list(estimates)) {
      pf::Scenario s = scenario_from_item(item);
      chia.emplace_back("Chia (" + s.name + ")", pf::total_emissions(s).network.c_total.to(pf::MassUnit::Mt));
    }
    if (!claim.empty()) {
      auto e = parse_energy(claim);
      chia.emplace_back("Chia claim (" + claim + ")",
                        pf::claim_to_emissions(e, pf::CarbonIntensity(claim_intensity)));
    }
    if (common.stamp) out << "# generated " << utc_stamp() << "\n";
    out << pf::comparison_csv(pf::emit_comparison(records, chia));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pf::InputError& e) {
    std::cerr << "postfoot: error: " << e.what() << "\n";
    return 2;
  } catch (const pf::InvariantError& e) {
    std::cerr << "postfoot: internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "postfoot: internal error: " << e.what() << "\n";
    return 3;
  }
}
