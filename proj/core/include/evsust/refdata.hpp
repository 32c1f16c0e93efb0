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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evsust/quantity.hpp"

namespace evsust {

struct MixEntry {
  std::string source;
  Fraction share;

  bool operator==(const MixEntry&) const = default;
};

// Annual generation broken down by source.
struct GridMix {
  std::vector<MixEntry> entries;
  Energy total_generation;
  int year = 0;

  bool has_source(std::string_view source) const;
  // Throws UnknownSource.
  Fraction share_of(std::string_view source) const;

  bool operator==(const GridMix&) const = default;
};

struct MixViolation {
  enum class Kind { ShareOutOfRange, SumNotOne, DuplicateSource };
  Kind kind;
  std::string detail;
};

// Empty iff every share is in [0, 1], shares sum to 1 within 1e-9 and
// source names are unique.
std::vector<MixViolation> validate_mix(const GridMix& mix);

// total_generation times the summed shares of `group`. Throws UnknownSource.
Energy source_group_energy(const GridMix& mix,
                           const std::vector<std::string>& group);

struct BatteryChemistry {
  std::string name;
  SpecificEnergy energy_density;
  Mass pack_mass;
  Energy pack_capacity;
  Energy manufacture_energy;  // per pack
  std::string electrodes;
  std::string electrolyte;
  std::string emissions;
  std::string comments;

  bool operator==(const BatteryChemistry&) const = default;
};

// Capacity must agree with density * mass within 2 %; manufacture energy
// must be positive.
std::vector<std::string> check_chemistry(const BatteryChemistry& chem);

// Built-in chemistries: "Pb-acid" and "NiMH". Throws UnknownChemistry.
const BatteryChemistry& builtin_chemistry(std::string_view name);
const std::vector<BatteryChemistry>& builtin_chemistries();

struct RangeInterval {
  Distance lo;
  Distance hi;

  // Ranges printed as "100-120" enter statistics through their midpoint.
  Distance midpoint() const { return Distance((lo.value() + hi.value()) / 2); }
  bool operator==(const RangeInterval&) const = default;
};

struct EvModel {
  std::string name;
  std::optional<Power> power;
  std::optional<Speed> max_speed;
  std::optional<RangeInterval> range;

  bool operator==(const EvModel&) const = default;
};

struct EvCatalog {
  std::vector<EvModel> models;
};

// The ten-vehicle performance catalog (2009 models).
const EvCatalog& builtin_catalog();

enum class CatalogField { Power, MaxSpeed, Range };

struct CatalogStats {
  double mean = 0.0;    // canonical unit of the field (W, mph, mi)
  double median = 0.0;
  std::size_t count_used = 0;
};

// Absent fields are skipped; an even count takes the mean of the two
// central values. Throws EmptyField.
CatalogStats catalog_stats(const EvCatalog& catalog, CatalogField field);

struct ReferenceDataset {
  std::string id;
  int year = 0;
  GridMix mix;
  std::optional<Energy> total_consumption;
  std::optional<Fraction> transport_share;
  std::optional<Fraction> fuel_share;
  std::optional<Volume> household_gasoline;
  HeatContent gasoline_heat_content;
  Mass co2_total;
  Fraction renewable_target;
  std::vector<std::pair<std::string, WaterIntensity>> water_intensity;

  bool operator==(const ReferenceDataset&) const = default;
};

// All violations of the dataset invariants, mix and fractions included.
std::vector<std::string> check_dataset(const ReferenceDataset& dataset);

// "us2005" or "us2001". Throws UnknownDataset.
const ReferenceDataset& builtin_dataset(std::string_view id);
std::vector<std::string> builtin_dataset_ids();

// How a built-in mix share was obtained ("" for non-built-in data).
std::string_view mix_share_provenance(std::string_view dataset_id,
                                      std::string_view source);

// Runs validate_mix, check_chemistry and check_dataset over every built-in.
// Returns the violations, empty when the shipped data is consistent.
std::vector<std::string> self_check();

}  // namespace evsust
