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

#include "evsust/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace evsust::engine {

namespace {

void require_fraction(Fraction f, const char* what) {
  if (f.value() < 0.0 || f.value() > 1.0) {
    throw Error(ErrorKind::FractionOutOfRange,
                std::string(what) + " " + format_shortest(f.value()) +
                    " outside [0, 1]");
  }
}

void require_non_negative(double v, const char* what) {
  if (v < 0.0) {
    throw Error(ErrorKind::NegativeWherePhysical,
                std::string(what) + " must be non-negative");
  }
}

}  // namespace

Energy fleet_energy_from_shares(const SharesBasis& basis) {
  require_fraction(basis.transport_share, "transport share");
  require_fraction(basis.fuel_share, "fuel share");
  require_non_negative(basis.total_energy.value(), "total energy");
  return basis.total_energy * basis.transport_share.value() *
         basis.fuel_share.value();
}

Energy fleet_energy_from_gallons(const GallonsBasis& basis) {
  require_non_negative(basis.gallons.value(), "gasoline volume");
  require_non_negative(basis.heat_content.value(), "heat content");
  const double btu = basis.gallons.value() * basis.heat_content.value();
  return Energy(btu_to_energy_wh(btu, basis.btu));
}

Energy fleet_energy(const FleetEnergyBasis& basis) {
  return std::visit(
      [](const auto& b) {
        if constexpr (std::is_same_v<std::decay_t<decltype(b)>, SharesBasis>) {
          return fleet_energy_from_shares(b);
        } else {
          return fleet_energy_from_gallons(b);
        }
      },
      basis);
}

Energy per_ev_energy(Power power, Distance range, Speed speed) {
  if (speed.value() <= 0.0) {
    throw Error(ErrorKind::ZeroSpeed, "EV speed must be > 0");
  }
  require_non_negative(power.value(), "EV power");
  require_non_negative(range.value(), "EV range");
  // W * (mi / (mi/h)) = Wh
  return Energy(power.value() * (range.value() / speed.value()));
}

BatteryDemand battery_demand_method_a(Energy fleet_energy, Energy per_ev,
                                      Count batteries_per_ev,
                                      const BatteryChemistry& chem) {
  if (per_ev.value() <= 0.0) {
    throw Error(ErrorKind::ZeroPerEvEnergy, "per-EV energy must be > 0");
  }
  if (batteries_per_ev.value() < 1.0) {
    throw Error(ErrorKind::InvalidArgument, "batteries_per_ev must be >= 1");
  }
  require_non_negative(fleet_energy.value(), "fleet energy");
  const Count evs(fleet_energy / per_ev);
  const Count batteries = evs * batteries_per_ev.value();
  return {Method::A, evs, batteries, chem.name, chem.manufacture_energy,
          chem.manufacture_energy * batteries.value()};
}

BatteryDemand battery_demand_method_b(Energy fleet_energy,
                                      const BatteryChemistry& chem) {
  if (chem.pack_capacity.value() <= 0.0) {
    throw Error(ErrorKind::ZeroCapacity,
                "pack capacity of '" + chem.name + "' must be > 0");
  }
  require_non_negative(fleet_energy.value(), "fleet energy");
  const Count batteries(fleet_energy / chem.pack_capacity);
  return {Method::B, std::nullopt, batteries, chem.name,
          chem.manufacture_energy,
          chem.manufacture_energy * batteries.value()};
}

std::vector<ProductionRow> production_energy_table(
    const std::vector<BatteryDemand>& demands) {
  std::vector<ProductionRow> rows;
  rows.reserve(demands.size());
  for (const auto& d : demands) {
    rows.push_back({d.method, d.chemistry, d.production_energy,
                    d.production_energy / kPaperTableScale});
  }
  return rows;
}

CarbonIntensity carbon_intensity(Mass total_emissions,
                                 Energy total_generation) {
  if (total_generation.value() <= 0.0) {
    throw Error(ErrorKind::ZeroGeneration, "total generation must be > 0");
  }
  // The quotient is nudged by at most a few ulps so that applying the
  // intensity to the calibration generation returns the emissions exactly.
  const double m = total_emissions.value();
  const double e = total_generation.value();
  const double q = m / e;
  double up = q;
  double down = q;
  for (int i = 0; i <= 8; ++i) {
    if (up * e == m) return CarbonIntensity(up);
    if (down * e == m) return CarbonIntensity(down);
    up = std::nextafter(up, std::numeric_limits<double>::infinity());
    down = std::nextafter(down, 0.0);
  }
  return CarbonIntensity(q);
}

Mass additional_co2(Energy additional_energy, CarbonIntensity intensity) {
  return Mass(additional_energy.value() * intensity.value());
}

Volume water_use(Energy additional_energy, Fraction fuel_share,
                 WaterIntensity intensity) {
  require_fraction(fuel_share, "fuel share");
  return Volume(additional_energy.value() * fuel_share.value() *
                intensity.value());
}

StrategyResult sustainable_conversion_fraction(Energy baseline_generation,
                                               Fraction renewable_share,
                                               Energy fleet_energy) {
  if (fleet_energy.value() <= 0.0) {
    throw Error(ErrorKind::ZeroFleetEnergy, "fleet energy must be > 0");
  }
  require_fraction(renewable_share, "renewable share");
  StrategyResult r;
  r.renewable_energy = baseline_generation * renewable_share.value();
  r.fraction = r.renewable_energy / fleet_energy;
  r.full_conversion = r.fraction >= 1.0;
  return r;
}

CapacityDeficit capacity_deficit(Energy fleet_energy, Energy battery_energy,
                                 Energy baseline_generation) {
  if (baseline_generation.value() <= 0.0) {
    throw Error(ErrorKind::ZeroBaseline, "baseline generation must be > 0");
  }
  CapacityDeficit d;
  d.total_required = fleet_energy + battery_energy;
  d.ratio_to_baseline = d.total_required / baseline_generation;
  d.deficit = Energy(
      std::max(0.0, d.total_required.value() - baseline_generation.value()));
  return d;
}

}  // namespace evsust::engine
