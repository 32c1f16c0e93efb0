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
#include <variant>
#include <vector>

#include "evsust/quantity.hpp"
#include "evsust/refdata.hpp"

// Fleet-electrification accounting. Every function is pure; division by a
// zero denominator raises a typed Error instead of producing infinity.
namespace evsust::engine {

struct SharesBasis {
  Energy total_energy;
  Fraction transport_share;
  Fraction fuel_share;

  bool operator==(const SharesBasis&) const = default;
};

struct GallonsBasis {
  Volume gallons;
  HeatContent heat_content;
  BtuConstant btu = BtuConstant::Exact;

  bool operator==(const GallonsBasis&) const = default;
};

using FleetEnergyBasis = std::variant<SharesBasis, GallonsBasis>;

enum class Method { A, B };

struct BatteryDemand {
  Method method;
  std::optional<Count> ev_count;  // method A only
  Count battery_count;
  std::string chemistry;
  Energy manufacture_energy;  // per pack
  Energy production_energy;   // battery_count * manufacture_energy

  bool operator==(const BatteryDemand&) const = default;
};

// Throws FractionOutOfRange.
Energy fleet_energy_from_shares(const SharesBasis& basis);
Energy fleet_energy_from_gallons(const GallonsBasis& basis);
Energy fleet_energy(const FleetEnergyBasis& basis);

// power * (range / speed). Throws ZeroSpeed.
Energy per_ev_energy(Power power, Distance range, Speed speed);

// EVs = fleet / per-EV energy; batteries = EVs * batteries_per_ev.
// Throws ZeroPerEvEnergy, InvalidArgument (batteries_per_ev < 1).
BatteryDemand battery_demand_method_a(Energy fleet_energy, Energy per_ev,
                                      Count batteries_per_ev,
                                      const BatteryChemistry& chem);

// batteries = fleet / pack capacity. Throws ZeroCapacity.
BatteryDemand battery_demand_method_b(Energy fleet_energy,
                                      const BatteryChemistry& chem);

// The published battery table lists consistent energies divided by 10^3
// (count x kWh read as TWh instead of 10^3 TWh).
inline constexpr double kPaperTableScale = 1e3;

// The published freshwater totals are consistent volumes times 10^3
// (TWh read as 10^9 MWh instead of 10^6 MWh).
inline constexpr double kPublishedWaterScale = 1e3;

struct ProductionRow {
  Method method;
  std::string chemistry;
  Energy consistent;
  Energy paper_mantissa;  // consistent / kPaperTableScale
  bool operator==(const ProductionRow&) const = default;
};

std::vector<ProductionRow> production_energy_table(
    const std::vector<BatteryDemand>& demands);

// Throws ZeroGeneration.
CarbonIntensity carbon_intensity(Mass total_emissions, Energy total_generation);
Mass additional_co2(Energy additional_energy, CarbonIntensity intensity);

// energy * share * intensity. Throws FractionOutOfRange.
Volume water_use(Energy additional_energy, Fraction fuel_share,
                 WaterIntensity intensity);

struct StrategyResult {
  Energy renewable_energy;  // baseline * renewable share
  double fraction = 0.0;    // unclamped; may exceed 1
  bool full_conversion = false;

  bool operator==(const StrategyResult&) const = default;
};

// Share of the fleet that renewable generation could power.
// Throws ZeroFleetEnergy, FractionOutOfRange.
StrategyResult sustainable_conversion_fraction(Energy baseline_generation,
                                               Fraction renewable_share,
                                               Energy fleet_energy);

struct CapacityDeficit {
  Energy total_required;
  double ratio_to_baseline = 0.0;
  Energy deficit;  // max(0, total - baseline)

  bool operator==(const CapacityDeficit&) const = default;
};

// Throws ZeroBaseline.
CapacityDeficit capacity_deficit(Energy fleet_energy, Energy battery_energy,
                                 Energy baseline_generation);

}  // namespace evsust::engine
