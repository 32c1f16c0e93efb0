// Copyright 2026 The evsust Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "evsust/engine.hpp"
#include "evsust/quantity.hpp"
#include "evsust/refdata.hpp"

namespace evsust {

enum class MethodSelection { A, B, Both };
enum class BatteryConvention { Consistent, PaperMantissa };

struct EvTriple {
  Power power;
  Distance range;
  Speed speed;

  bool operator==(const EvTriple&) const = default;
};

// Per-EV energy from the medians of the built-in catalog.
struct CatalogMedian {
  bool operator==(const CatalogMedian&) const = default;
};

using EvReference = std::variant<Energy, EvTriple, CatalogMedian>;

struct Progression {
  AnyQuantity from;
  AnyQuantity to;
  AnyQuantity step;

  bool operator==(const Progression&) const = default;
};

struct SweepSpec {
  std::string path;
  std::variant<std::vector<AnyQuantity>, Progression> values;

  bool operator==(const SweepSpec&) const = default;
};

// Expands a progression as from + k * step, k = 0, 1, ... while the value
// stays within [from, to] (1e-9 relative slack on the last step).
// Throws InvalidArgument for an empty, zero-step or unbounded progression.
std::vector<AnyQuantity> sweep_values(const SweepSpec& spec);

struct Scenario {
  std::string name;
  std::string dataset_ref;  // built-in id; empty when the dataset is inline
  ReferenceDataset dataset;
  engine::FleetEnergyBasis fleet;
  EvReference ev = CatalogMedian{};
  Count batteries_per_ev{4};
  std::string chemistry = "NiMH";
  std::vector<BatteryChemistry> custom_chemistries;
  MethodSelection method = MethodSelection::Both;
  BatteryConvention convention = BatteryConvention::PaperMantissa;
  Fraction renewable_share;
  Energy baseline_generation;
  std::vector<std::pair<std::string, WaterIntensity>> water;
  std::optional<SweepSpec> sweep;

  // Custom chemistries shadow nothing; built-ins are searched second.
  // Throws UnknownChemistry.
  const BatteryChemistry& resolved_chemistry() const;

  bool operator==(const Scenario&) const = default;
};

// Fully-defaulted scenario over a built-in dataset. Throws UnknownDataset.
Scenario default_scenario(std::string_view dataset_id);

// Empty iff the scenario satisfies every invariant.
std::vector<std::string> validate_scenario(const Scenario& s);

// Throws ParseError (line/column), UnknownDataset, UnknownChemistry,
// ValidationError.
Scenario load_scenario(std::string_view text);
// As load_scenario; throws Error(Io) when the file cannot be read.
Scenario load_scenario_file(const std::filesystem::path& path);

// Scenario-file text with every field explicit; load_scenario reads it back
// to an equal Scenario.
std::string render_scenario(const Scenario& s);

// The dataset alone in scenario-file syntax ([dataset], [mix],
// [dataset.water]); loadable as a scenario over that inline dataset.
std::string render_dataset(const ReferenceDataset& d);

// Shipped reproduction scenarios: "paper-2005", "paper-2001".
std::string_view canonical_scenario_text(std::string_view name);
const Scenario& canonical_scenario(std::string_view name);

// Copy of `s` with the parameter at `path` set to `value`.
// Throws UnknownParameter, DimensionMismatch.
Scenario with_override(const Scenario& s, std::string_view path,
                       const AnyQuantity& value);

// Dimension a sweep value for `path` must have. Throws UnknownParameter.
Dimension parameter_dimension(const Scenario& s, std::string_view path);

// A literal from the command line or a sweep list: a quantity literal, or a
// bare decimal (Scalar).
AnyQuantity parse_literal(std::string_view text);

struct WaterLine {
  std::string fuel;
  Fraction share;
  WaterIntensity intensity;
  Volume volume;

  bool operator==(const WaterLine&) const = default;
};

// Attached where a computed value departs from, or reinterprets, a
// published figure.
struct Note {
  std::string field;
  std::string text;

  bool operator==(const Note&) const = default;
};

struct Assessment {
  Scenario scenario;
  Energy fleet_energy;
  Energy per_ev_energy;
  Count ev_count;
  std::vector<engine::BatteryDemand> demands;
  std::vector<engine::ProductionRow> production;
  Energy battery_energy;  // largest production energy, in the chosen scale
  Energy total_additional_energy;
  CarbonIntensity carbon_intensity;
  Mass additional_co2;
  std::vector<WaterLine> water;  // over the fleet energy
  std::optional<engine::StrategyResult> strategy;  // absent for zero fleet
  engine::CapacityDeficit deficit;
  std::vector<Note> notes;

  bool operator==(const Assessment&) const = default;
};

// Runs, in order: fleet energy, per-EV energy, battery demands, production
// energy, total additional energy, CO2, water, strategy, deficit.
// Engine errors are rethrown prefixed with the responsible scenario field.
Assessment assess(const Scenario& s);

struct SweepPoint {
  AnyQuantity value;
  std::optional<Assessment> assessment;
  std::string error;  // set iff assessment is empty

  bool operator==(const SweepPoint&) const = default;
};

// One point per value, in value order. Points fail independently. `threads`
// of 0 picks the hardware concurrency. Throws UnknownParameter,
// DimensionMismatch, InvalidArgument (bad progression).
std::vector<SweepPoint> sweep(const Scenario& s, const SweepSpec& spec,
                              unsigned threads = 0);

}  // namespace evsust
