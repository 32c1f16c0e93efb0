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

#include "evsust/refdata.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace evsust {

namespace {
constexpr double kMixSumTolerance = 1e-9;
constexpr double kCapacityTolerance = 0.02;

std::string fmt(double v) { return format_shortest(v); }
}  // namespace

bool GridMix::has_source(std::string_view source) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const MixEntry& e) { return e.source == source; });
}

Fraction GridMix::share_of(std::string_view source) const {
  for (const auto& e : entries) {
    if (e.source == source) return e.share;
  }
  throw Error(ErrorKind::UnknownSource,
              "unknown generation source '" + std::string(source) + "'");
}

std::vector<MixViolation> validate_mix(const GridMix& mix) {
  std::vector<MixViolation> out;
  std::set<std::string> seen;
  double sum = 0.0;
  for (const auto& e : mix.entries) {
    const double s = e.share.value();
    if (s < 0.0 || s > 1.0) {
      out.push_back({MixViolation::Kind::ShareOutOfRange,
                     "share of '" + e.source + "' is " + fmt(s) +
                         ", outside [0, 1]"});
    }
    if (!seen.insert(e.source).second) {
      out.push_back({MixViolation::Kind::DuplicateSource,
                     "duplicate source '" + e.source + "'"});
    }
    sum += s;
  }
  if (std::fabs(sum - 1.0) > kMixSumTolerance) {
    out.push_back({MixViolation::Kind::SumNotOne,
                   "shares sum to " + fmt(sum) + ", expected 1"});
  }
  return out;
}

Energy source_group_energy(const GridMix& mix,
                           const std::vector<std::string>& group) {
  double share = 0.0;
  for (const auto& source : group) share += mix.share_of(source).value();
  return mix.total_generation * share;
}

std::vector<std::string> check_chemistry(const BatteryChemistry& chem) {
  std::vector<std::string> out;
  const double nominal = chem.pack_capacity.value();
  const double product =
      chem.energy_density.value() * chem.pack_mass.as("kg");
  if (nominal <= 0.0) {
    out.push_back("chemistry '" + chem.name + "': pack capacity must be > 0");
  } else if (std::fabs(product - nominal) / nominal > kCapacityTolerance) {
    out.push_back("chemistry '" + chem.name + "': density x mass = " +
                  fmt(product) + " Wh disagrees with pack capacity " +
                  fmt(nominal) + " Wh by more than 2%");
  }
  if (!(chem.manufacture_energy.value() > 0.0)) {
    out.push_back("chemistry '" + chem.name +
                  "': manufacture energy must be > 0");
  }
  if (chem.energy_density.value() <= 0.0 || chem.pack_mass.value() <= 0.0) {
    out.push_back("chemistry '" + chem.name +
                  "': energy density and pack mass must be > 0");
  }
  return out;
}

const std::vector<BatteryChemistry>& builtin_chemistries() {
  static const std::vector<BatteryChemistry> chemistries{
      {"Pb-acid", SpecificEnergy(50), Mass::in(500, "kg"),
       Energy::in(25, "kWh"), Energy::in(3430, "kWh"),
       "Lead on fiberglass mesh", "Sulfuric acid", "Lead particulates",
       "Short battery life, existing recycling infrastructure"},
      {"NiMH", SpecificEnergy(75), Mass::in(330, "kg"), Energy::in(25, "kWh"),
       Energy::in(7176, "kWh"), "Nickel hydroxide and metal hydride",
       "Potassium hydroxide", "Unknown", "MH recycling process unknown"},
  };
  return chemistries;
}

const BatteryChemistry& builtin_chemistry(std::string_view name) {
  for (const auto& c : builtin_chemistries()) {
    if (c.name == name) return c;
  }
  throw Error(ErrorKind::UnknownChemistry,
              "unknown battery chemistry '" + std::string(name) + "'");
}

const EvCatalog& builtin_catalog() {
  static const EvCatalog catalog = [] {
    auto kw = [](double v) { return std::optional<Power>(Power::in(v, "kW")); };
    auto mph = [](double v) { return std::optional<Speed>(Speed(v)); };
    auto range = [](double lo, double hi) {
      return std::optional<RangeInterval>(RangeInterval{Distance(lo), Distance(hi)});
    };
    EvCatalog c;
    c.models = {
        {"Chevrolet Volt", kw(112), mph(100), range(40, 40)},
        {"Fisker Karma", kw(300), mph(125), range(50, 50)},
        {"GM Opel Ampera", kw(112), mph(100), range(37, 37)},
        {"Mini E", kw(150), mph(95), range(100, 120)},
        {"Mitsubishi", kw(47), mph(80), range(100, 100)},
        {"Nissan E Car", kw(80), std::nullopt, range(100, 100)},
        {"Tesla Roadster", kw(215), mph(125), range(227, 227)},
        {"Th!nk city", kw(30), mph(65), range(112, 112)},
        {"Toyota Prius PHEV", std::nullopt, std::nullopt, std::nullopt},
        {"ZENN", kw(22.4), mph(25), range(30, 50)},
    };
    return c;
  }();
  return catalog;
}

CatalogStats catalog_stats(const EvCatalog& catalog, CatalogField field) {
  std::vector<double> values;
  for (const auto& m : catalog.models) {
    switch (field) {
      case CatalogField::Power:
        if (m.power) values.push_back(m.power->value());
        break;
      case CatalogField::MaxSpeed:
        if (m.max_speed) values.push_back(m.max_speed->value());
        break;
      case CatalogField::Range:
        if (m.range) values.push_back(m.range->midpoint().value());
        break;
    }
  }
  if (values.empty()) {
    throw Error(ErrorKind::EmptyField, "no catalog model has the field");
  }
  CatalogStats stats;
  stats.count_used = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  stats.mean = sum / static_cast<double>(values.size());
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) {
    stats.median = upper;
  } else {
    const double lower = *std::max_element(values.begin(), values.begin() + mid);
    stats.median = (lower + upper) / 2;
  }
  return stats;
}

namespace {

GridMix us2005_mix() {
  GridMix mix;
  mix.year = 2005;
  mix.total_generation = Energy::in(4055, "TWh");
  mix.entries = {
      {"coal", Fraction(0.4970)},     {"natural_gas", Fraction(0.1880)},
      {"oil", Fraction(0.0300)},      {"nuclear", Fraction(0.1930)},
      {"hydro", Fraction(0.0650)},    {"other_renewables", Fraction(0.0270)},
  };
  return mix;
}

std::vector<std::pair<std::string, WaterIntensity>> fossil_water() {
  return {{"coal", WaterIntensity::in(480, "gal/MWh")},
          {"natural_gas", WaterIntensity::in(180, "gal/MWh")}};
}

const std::vector<ReferenceDataset>& datasets() {
  static const std::vector<ReferenceDataset> all = [] {
    ReferenceDataset us2005;
    us2005.id = "us2005";
    us2005.year = 2005;
    us2005.mix = us2005_mix();
    us2005.total_consumption = Energy::in(29000, "TWh");
    us2005.transport_share = Fraction(0.28);
    us2005.fuel_share = Fraction(0.61);
    us2005.gasoline_heat_content =
        HeatContent(units::kGasolineHeatContentBtuPerGal);
    us2005.co2_total = Mass::in(2480, "Mt");
    us2005.renewable_target = Fraction(0.30);
    us2005.water_intensity = fossil_water();

    // Household-vehicle gasoline is a 2001 survey figure; generation, mix
    // and emissions remain the 2005 baseline it is compared against.
    ReferenceDataset us2001;
    us2001.id = "us2001";
    us2001.year = 2001;
    us2001.mix = us2005_mix();
    us2001.household_gasoline = Volume(113.1e9);
    us2001.gasoline_heat_content =
        HeatContent(units::kGasolineHeatContentBtuPerGal);
    us2001.co2_total = Mass::in(2480, "Mt");
    us2001.renewable_target = Fraction(0.30);
    us2001.water_intensity = fossil_water();
    return std::vector<ReferenceDataset>{us2005, us2001};
  }();
  return all;
}

}  // namespace

const ReferenceDataset& builtin_dataset(std::string_view id) {
  for (const auto& d : datasets()) {
    if (d.id == id) return d;
  }
  throw Error(ErrorKind::UnknownDataset,
              "unknown dataset '" + std::string(id) + "'");
}

std::vector<std::string> builtin_dataset_ids() {
  std::vector<std::string> ids;
  for (const auto& d : datasets()) ids.push_back(d.id);
  return ids;
}

std::string_view mix_share_provenance(std::string_view dataset_id,
                                      std::string_view source) {
  if (dataset_id != "us2005" && dataset_id != "us2001") return "";
  if (source == "coal") {
    return "backed out of the coal freshwater total: published 1181.58e12 "
           "gal is 10^3 x the consistent 1.18158e12 gal; 1.18158e12 gal / "
           "(4.953e9 MWh x 480 gal/MWh) = 0.4970";
  }
  if (source == "nuclear") return "published nuclear share, 19.3 %";
  if (source == "natural_gas" || source == "oil") {
    return "allocated so coal + natural_gas + oil = 71.5 %, within 0.2 "
           "points of the published 71.4 % fossil share";
  }
  if (source == "hydro" || source == "other_renewables") {
    return "remainder split between hydro and other renewables "
           "(reconstruction, not published per source)";
  }
  return "";
}

std::vector<std::string> check_dataset(const ReferenceDataset& d) {
  std::vector<std::string> out;
  for (const auto& v : validate_mix(d.mix)) {
    out.push_back("dataset '" + d.id + "' mix: " + v.detail);
  }
  auto fraction = [&](const char* what, const std::optional<Fraction>& f) {
    if (f && (f->value() < 0.0 || f->value() > 1.0)) {
      out.push_back("dataset '" + d.id + "': " + what + " " +
                    fmt(f->value()) + " outside [0, 1]");
    }
  };
  fraction("transport_share", d.transport_share);
  fraction("fuel_share", d.fuel_share);
  fraction("renewable_target", d.renewable_target);
  auto non_negative = [&](const char* what, double v) {
    if (v < 0.0) {
      out.push_back("dataset '" + d.id + "': " + what + " is negative");
    }
  };
  non_negative("total_generation", d.mix.total_generation.value());
  if (d.total_consumption) {
    non_negative("total_consumption", d.total_consumption->value());
  }
  if (d.household_gasoline) {
    non_negative("household_gasoline", d.household_gasoline->value());
  }
  non_negative("gasoline_heat_content", d.gasoline_heat_content.value());
  non_negative("co2_total", d.co2_total.value());
  for (const auto& [fuel, intensity] : d.water_intensity) {
    non_negative(("water intensity of " + fuel).c_str(), intensity.value());
  }
  return out;
}

std::vector<std::string> self_check() {
  std::vector<std::string> out;
  for (const auto& d : datasets()) {
    auto v = check_dataset(d);
    out.insert(out.end(), v.begin(), v.end());
  }
  for (const auto& c : builtin_chemistries()) {
    auto v = check_chemistry(c);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace evsust
