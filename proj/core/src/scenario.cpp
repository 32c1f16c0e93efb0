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

#include "evsust/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "canonical_scenarios.inc"

namespace evsust {

namespace {

bool is_builtin_dataset(const ReferenceDataset& d) {
  return d.id == "us2005" || d.id == "us2001";
}

bool in_unit_interval(Fraction f) {
  return f.value() >= 0.0 && f.value() <= 1.0;
}

template <class F>
auto with_field(std::string_view field, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(field) + ": " + e.what());
  }
}

}  // namespace

const BatteryChemistry& Scenario::resolved_chemistry() const {
  for (const auto& c : custom_chemistries) {
    if (c.name == chemistry) return c;
  }
  return builtin_chemistry(chemistry);
}

Scenario default_scenario(std::string_view dataset_id) {
  builtin_dataset(dataset_id);
  return load_scenario("[meta]\ndataset = " + std::string(dataset_id) + "\n");
}

std::vector<std::string> validate_scenario(const Scenario& s) {
  std::vector<std::string> out = check_dataset(s.dataset);
  auto fraction = [&](const char* what, Fraction f) {
    if (!in_unit_interval(f)) {
      out.push_back(std::string(what) + " = " + format_shortest(f.value()) +
                    " outside [0, 1]");
    }
  };
  auto non_negative = [&](const char* what, double v) {
    if (v < 0.0) out.push_back(std::string(what) + " must be non-negative");
  };
  if (const auto* b = std::get_if<engine::SharesBasis>(&s.fleet)) {
    non_negative("fleet.total_energy", b->total_energy.value());
    fraction("fleet.transport_share", b->transport_share);
    fraction("fleet.fuel_share", b->fuel_share);
  } else {
    const auto& g = std::get<engine::GallonsBasis>(s.fleet);
    non_negative("fleet.gallons", g.gallons.value());
    non_negative("fleet.heat_content", g.heat_content.value());
  }
  if (const auto* e = std::get_if<Energy>(&s.ev)) {
    non_negative("ev.per_ev_energy", e->value());
  } else if (const auto* t = std::get_if<EvTriple>(&s.ev)) {
    non_negative("ev.power", t->power.value());
    non_negative("ev.range", t->range.value());
    non_negative("ev.speed", t->speed.value());
  }
  if (!(s.batteries_per_ev.value() >= 1.0)) {
    out.push_back("battery.batteries_per_ev = " +
                  format_shortest(s.batteries_per_ev.value()) +
                  " must be >= 1");
  }
  for (const auto& c : s.custom_chemistries) {
    for (const auto& b : builtin_chemistries()) {
      if (b.name == c.name) {
        out.push_back("chemistry '" + c.name + "' shadows a built-in");
      }
    }
    auto v = check_chemistry(c);
    out.insert(out.end(), v.begin(), v.end());
  }
  const bool known_chemistry =
      std::any_of(s.custom_chemistries.begin(), s.custom_chemistries.end(),
                  [&](const BatteryChemistry& c) { return c.name == s.chemistry; }) ||
      std::any_of(builtin_chemistries().begin(), builtin_chemistries().end(),
                  [&](const BatteryChemistry& c) { return c.name == s.chemistry; });
  if (!known_chemistry) {
    out.push_back("battery.chemistry: unknown chemistry '" + s.chemistry + "'");
  }
  fraction("strategy.renewable_share", s.renewable_share);
  non_negative("strategy.baseline_generation", s.baseline_generation.value());
  for (const auto& [fuel, intensity] : s.water) {
    if (!s.dataset.mix.has_source(fuel)) {
      out.push_back("water." + fuel + ": not a source of the grid mix");
    }
    non_negative(("water." + fuel).c_str(), intensity.value());
  }
  if (s.sweep) {
    try {
      parameter_dimension(s, s.sweep->path);
    } catch (const Error& e) {
      out.push_back(std::string("sweep.path: ") + e.what());
    }
  }
  return out;
}

std::string_view canonical_scenario_text(std::string_view name) {
  if (name == "paper-2005") return kCanonicalPaper2005;
  if (name == "paper-2001") return kCanonicalPaper2001;
  throw Error(ErrorKind::InvalidArgument,
              "unknown canonical scenario '" + std::string(name) + "'");
}

const Scenario& canonical_scenario(std::string_view name) {
  static const Scenario s2005 = load_scenario(kCanonicalPaper2005);
  static const Scenario s2001 = load_scenario(kCanonicalPaper2001);
  if (name == "paper-2005") return s2005;
  if (name == "paper-2001") return s2001;
  throw Error(ErrorKind::InvalidArgument,
              "unknown canonical scenario '" + std::string(name) + "'");
}

Dimension parameter_dimension(const Scenario& s, std::string_view path) {
  const bool shares = std::holds_alternative<engine::SharesBasis>(s.fleet);
  if (path == "strategy.renewable_share") return Dimension::Fraction;
  if (path == "strategy.baseline_generation") return Dimension::Energy;
  if (path == "battery.batteries_per_ev") return Dimension::Count;
  if (path == "ev.per_ev_energy") return Dimension::Energy;
  if (path == "ev.power" || path == "ev.range" || path == "ev.speed") {
    if (!std::holds_alternative<Energy>(s.ev)) {
      if (path == "ev.power") return Dimension::Power;
      if (path == "ev.range") return Dimension::Distance;
      return Dimension::Speed;
    }
  }
  if (shares) {
    if (path == "fleet.total_energy") return Dimension::Energy;
    if (path == "fleet.transport_share" || path == "fleet.fuel_share") {
      return Dimension::Fraction;
    }
  } else {
    if (path == "fleet.gallons") return Dimension::Volume;
    if (path == "fleet.heat_content") return Dimension::HeatContent;
  }
  if (path.rfind("water.", 0) == 0) {
    const std::string_view fuel = path.substr(6);
    for (const auto& w : s.water) {
      if (w.first == fuel) return Dimension::WaterIntensity;
    }
  }
  throw Error(ErrorKind::UnknownParameter,
              "unknown or inapplicable parameter '" + std::string(path) + "'");
}

Scenario with_override(const Scenario& s, std::string_view path,
                       const AnyQuantity& value) {
  parameter_dimension(s, path);
  Scenario out = s;
  if (path == "strategy.renewable_share") {
    out.renewable_share = value.as<Dimension::Fraction>();
  } else if (path == "strategy.baseline_generation") {
    out.baseline_generation = value.as<Dimension::Energy>();
  } else if (path == "battery.batteries_per_ev") {
    out.batteries_per_ev = value.as<Dimension::Count>();
  } else if (path == "ev.per_ev_energy") {
    out.ev = value.as<Dimension::Energy>();
  } else if (path.rfind("ev.", 0) == 0) {
    EvTriple t;
    if (const auto* existing = std::get_if<EvTriple>(&out.ev)) {
      t = *existing;
    } else {
      const auto& catalog = builtin_catalog();
      t = {Power(catalog_stats(catalog, CatalogField::Power).median),
           Distance(catalog_stats(catalog, CatalogField::Range).median),
           Speed(catalog_stats(catalog, CatalogField::MaxSpeed).median)};
    }
    if (path == "ev.power") t.power = value.as<Dimension::Power>();
    if (path == "ev.range") t.range = value.as<Dimension::Distance>();
    if (path == "ev.speed") t.speed = value.as<Dimension::Speed>();
    out.ev = t;
  } else if (auto* b = std::get_if<engine::SharesBasis>(&out.fleet);
             b != nullptr && path.rfind("fleet.", 0) == 0) {
    if (path == "fleet.total_energy") b->total_energy = value.as<Dimension::Energy>();
    if (path == "fleet.transport_share") {
      b->transport_share = value.as<Dimension::Fraction>();
    }
    if (path == "fleet.fuel_share") b->fuel_share = value.as<Dimension::Fraction>();
  } else if (auto* g = std::get_if<engine::GallonsBasis>(&out.fleet);
             g != nullptr && path.rfind("fleet.", 0) == 0) {
    if (path == "fleet.gallons") g->gallons = value.as<Dimension::Volume>();
    if (path == "fleet.heat_content") {
      g->heat_content = value.as<Dimension::HeatContent>();
    }
  } else {
    const std::string_view fuel = path.substr(6);
    for (auto& w : out.water) {
      if (w.first == fuel) w.second = value.as<Dimension::WaterIntensity>();
    }
  }
  return out;
}

std::vector<AnyQuantity> sweep_values(const SweepSpec& spec) {
  if (const auto* list = std::get_if<std::vector<AnyQuantity>>(&spec.values)) {
    if (list->empty()) {
      throw Error(ErrorKind::InvalidArgument, "sweep has no values");
    }
    return *list;
  }
  const auto& p = std::get<Progression>(spec.values);
  if (p.from.dimension() != p.to.dimension() ||
      p.from.dimension() != p.step.dimension()) {
    throw Error(ErrorKind::DimensionMismatch,
                "sweep from/to/step must share one dimension");
  }
  const double from = p.from.canonical_value();
  const double to = p.to.canonical_value();
  const double step = p.step.canonical_value();
  if (step == 0.0) {
    throw Error(ErrorKind::InvalidArgument, "sweep step must be non-zero");
  }
  const double span = (to - from) / step;
  if (span < -1e-9) {
    throw Error(ErrorKind::InvalidArgument,
                "sweep progression is empty (step points away from 'to')");
  }
  const double count = std::floor(span + 1e-9) + 1;
  if (!(count <= 1e6)) {
    throw Error(ErrorKind::InvalidArgument, "sweep progression too long");
  }
  std::vector<AnyQuantity> out;
  const Unit& unit = units::canonical(p.from.dimension());
  const auto n = static_cast<std::size_t>(count);
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.emplace_back(from + static_cast<double>(k) * step, unit);
  }
  return out;
}

Assessment assess(const Scenario& s) {
  Assessment a;
  a.scenario = s;
  const ReferenceDataset& d = s.dataset;
  const bool published = is_builtin_dataset(d);

  a.fleet_energy = with_field("fleet", [&] { return engine::fleet_energy(s.fleet); });
  if (std::holds_alternative<engine::GallonsBasis>(s.fleet)) {
    a.notes.push_back(
        {"fleet energy",
         "Btu to Wh: the exact 0.293071 Wh/Btu is used unless btu_constant = "
         "rounded (0.2929 Wh/Btu, about 0.06% lower)"});
  }

  a.per_ev_energy = with_field("ev", [&] {
    if (const auto* e = std::get_if<Energy>(&s.ev)) return *e;
    if (const auto* t = std::get_if<EvTriple>(&s.ev)) {
      return engine::per_ev_energy(t->power, t->range, t->speed);
    }
    const auto& catalog = builtin_catalog();
    return engine::per_ev_energy(
        Power(catalog_stats(catalog, CatalogField::Power).median),
        Distance(catalog_stats(catalog, CatalogField::Range).median),
        Speed(catalog_stats(catalog, CatalogField::MaxSpeed).median));
  });

  const BatteryChemistry& chem =
      with_field("battery.chemistry", [&]() -> const BatteryChemistry& {
        return s.resolved_chemistry();
      });
  if (s.method != MethodSelection::B) {
    a.demands.push_back(with_field("ev", [&] {
      return engine::battery_demand_method_a(a.fleet_energy, a.per_ev_energy,
                                             s.batteries_per_ev, chem);
    }));
    a.ev_count = *a.demands.back().ev_count;
    a.notes.push_back(
        {"ev count",
         "method A divides annual fleet energy by the energy of one EV trip "
         "at top speed; kept as published, it is not a vehicle census"});
  } else {
    if (a.per_ev_energy.value() <= 0.0) {
      throw Error(ErrorKind::ZeroPerEvEnergy, "ev: per-EV energy must be > 0");
    }
    a.ev_count = Count(a.fleet_energy / a.per_ev_energy);
  }
  if (s.method != MethodSelection::A) {
    a.demands.push_back(with_field("battery", [&] {
      return engine::battery_demand_method_b(a.fleet_energy, chem);
    }));
  }

  a.production = engine::production_energy_table(a.demands);
  for (const auto& row : a.production) {
    const Energy e = s.convention == BatteryConvention::Consistent
                         ? row.consistent
                         : row.paper_mantissa;
    a.battery_energy = std::max(a.battery_energy, e);
  }
  a.notes.push_back(
      {"battery energy",
       s.convention == BatteryConvention::PaperMantissa
           ? "published table convention: consistent production energy / "
             "10^3 feeds the totals below"
           : "consistent production energy (10^3 x the published table "
             "convention) feeds the totals below"});

  a.total_additional_energy = a.fleet_energy + a.battery_energy;
  a.carbon_intensity = with_field("dataset", [&] {
    return engine::carbon_intensity(d.co2_total, d.mix.total_generation);
  });
  a.additional_co2 =
      engine::additional_co2(a.total_additional_energy, a.carbon_intensity);

  for (const auto& [fuel, intensity] : s.water) {
    const std::string field = "water." + fuel;
    const Fraction share =
        with_field(field, [&] { return d.mix.share_of(fuel); });
    const Volume v = with_field(field, [&] {
      return engine::water_use(a.fleet_energy, share, intensity);
    });
    a.water.push_back({fuel, share, intensity, v});
    if (published && fuel == "natural_gas") {
      a.notes.push_back(
          {field,
           "the published natural-gas freshwater total (336.11e12 gal) is "
           "about twice the published-scale value of 180 gal/MWh at any "
           "plausible gas share; not reproducible from stated inputs"});
    }
  }
  if (published && !a.water.empty()) {
    a.notes.push_back({"water",
                       "published freshwater totals are these volumes x 10^3 "
                       "(published scale); the volumes shown are consistent"});
  }

  if (a.fleet_energy.value() > 0.0) {
    a.strategy = with_field("strategy", [&] {
      return engine::sustainable_conversion_fraction(
          s.baseline_generation, s.renewable_share, a.fleet_energy);
    });
    if (a.strategy->full_conversion) {
      a.notes.push_back({"conversion fraction",
                         "renewable generation covers the whole fleet "
                         "(full conversion)"});
    }
  } else {
    a.notes.push_back(
        {"conversion fraction", "undefined: fleet energy is zero"});
  }

  a.deficit = with_field("strategy.baseline_generation", [&] {
    return engine::capacity_deficit(a.fleet_energy, a.battery_energy,
                                    s.baseline_generation);
  });
  if (published && s.baseline_generation.value() > 0.0) {
    const double fleet_ratio = a.fleet_energy / s.baseline_generation;
    if (fleet_ratio < 2.0) {
      a.notes.push_back(
          {"ratio to baseline",
           "fleet energy alone is " + format_number(fleet_ratio, 3) +
               "x baseline generation; the published text claims at least "
               "2x, which is not asserted here"});
    }
  }
  return a;
}

std::vector<SweepPoint> sweep(const Scenario& s, const SweepSpec& spec,
                              unsigned threads) {
  const Dimension dim = parameter_dimension(s, spec.path);
  const std::vector<AnyQuantity> values = sweep_values(spec);
  for (const auto& v : values) {
    const bool coercible =
        v.dimension() == Dimension::Scalar &&
        (dim == Dimension::Fraction || dim == Dimension::Count);
    if (v.dimension() != dim && !coercible) {
      throw Error(ErrorKind::DimensionMismatch,
                  "sweep value for '" + spec.path + "' must be " +
                      std::string(to_string(dim)) + ", got " +
                      std::string(to_string(v.dimension())));
    }
  }

  std::vector<SweepPoint> points;
  points.reserve(values.size());
  for (const auto& v : values) points.push_back({v, std::nullopt, {}});

  auto evaluate = [&](SweepPoint& p) {
    try {
      Scenario variant = with_override(s, spec.path, p.value);
      auto violations = validate_scenario(variant);
      if (!violations.empty()) throw ValidationError(std::move(violations));
      p.assessment = assess(variant);
    } catch (const Error& e) {
      p.error = e.what();
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(points.size()));
  if (threads <= 1) {
    for (auto& p : points) evaluate(p);
    return points;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
          evaluate(points[i]);
        }
      });
    }
  }
  return points;
}

}  // namespace evsust
