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

// Acceptance suite: one line per criterion, "PASS <n> <title>" or
// "FAIL <n> <title>: <detail>". Exits non-zero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evsust/engine.hpp"
#include "evsust/refdata.hpp"
#include "evsust/report.hpp"
#include "evsust/scenario.hpp"
#include "support.hpp"

using namespace evsust;
using namespace evsust::engine;
using evsust::test::read_file;
using evsust::test::rel_err;
using evsust::test::source_path;

namespace {

Energy twh(double v) { return Energy::in(v, "TWh"); }
Energy kwh(double v) { return Energy::in(v, "kWh"); }

// Collects the failed checks of one criterion.
class Checker {
 public:
  void within(const std::string& what, double computed, double expected,
              double tol) {
    const double e = rel_err(computed, expected);
    if (!(e <= tol)) {
      fail(what + " = " + format_shortest(computed) + ", expected " +
           format_shortest(expected) + " rel " + format_shortest(tol) +
           " (off by " + format_shortest(e) + ")");
    }
  }
  void absolute(const std::string& what, double computed, double expected,
                double tol) {
    if (!(std::abs(computed - expected) <= tol)) {
      fail(what + " = " + format_shortest(computed) + ", expected " +
           format_shortest(expected) + " +-" + format_shortest(tol));
    }
  }
  void that(const std::string& what, bool ok) {
    if (!ok) fail(what);
  }
  void fail(const std::string& msg) { failures_.push_back(msg); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  const char* title;
  std::function<void(Checker&)> body;
};

const BatteryDemand& demand(const Assessment& a, Method m,
                            const std::string& chem) {
  for (const auto& d : a.demands) {
    if (d.method == m && d.chemistry == chem) return d;
  }
  throw Error(ErrorKind::InvalidArgument, "demand not evaluated");
}

Assessment assess_with(const char* scenario, const char* chemistry) {
  Scenario s = canonical_scenario(scenario);
  s.chemistry = chemistry;
  return assess(s);
}

void shares_pipeline(Checker& c) {
  const Energy e =
      fleet_energy_from_shares({twh(29000), Fraction(0.28), Fraction(0.61)});
  c.within("fleet energy vs 4953.2 TWh", e.as("TWh"), 4953.2, 1e-9);
  c.within("fleet energy vs 4953 TWh", e.as("TWh"), 4953, 5e-4);
}

void gallons_pipeline(Checker& c) {
  const Volume g = Volume::in(113.1e9, "gal");
  const HeatContent h = HeatContent::in(114000, "Btu/gal");
  c.within("exact constant vs 3778 TWh",
           fleet_energy_from_gallons({g, h, BtuConstant::Exact}).as("TWh"),
           3778, 1e-3);
  c.within("rounded constant vs 3776.4 TWh",
           fleet_energy_from_gallons({g, h, BtuConstant::Rounded}).as("TWh"),
           3776.4, 5e-4);
}

void per_ev(Checker& c) {
  const double e =
      per_ev_energy(Power::in(112, "kW"), Distance(100), Speed(97.5)).as("kWh");
  c.within("per-EV energy vs 114.87 kWh", e, 114.87, 1e-4);
  c.within("per-EV energy vs 115 kWh", e, 115, 5e-3);
  const auto& cat = builtin_catalog();
  const Energy med = per_ev_energy(
      Power(catalog_stats(cat, CatalogField::Power).median),
      Distance(catalog_stats(cat, CatalogField::Range).median),
      Speed(catalog_stats(cat, CatalogField::MaxSpeed).median));
  c.within("catalog-median per-EV energy", med.as("kWh"), 114.87, 1e-4);
}

void counts(Checker& c) {
  const auto& ni = builtin_chemistry("NiMH");
  const auto a05 = battery_demand_method_a(twh(4953), kwh(115), Count(4), ni);
  c.within("EVs, A, 2005", a05.ev_count->value(), 43.07e9, 1e-3);
  c.within("batteries, A, 2005", a05.battery_count.value(), 172.28e9, 1e-3);
  const auto a01 = battery_demand_method_a(twh(3778), kwh(115), Count(4), ni);
  c.within("batteries, A, 2001", a01.battery_count.value(), 131.4e9, 2e-3);
  c.within("batteries, B, 2005",
           battery_demand_method_b(twh(4953), ni).battery_count.value(),
           198.12e9, 1e-3);
  c.within("batteries, B, 2001",
           battery_demand_method_b(twh(3778), ni).battery_count.value(),
           151.12e9, 1e-3);

  // The same figures through the shipped scenarios.
  const Assessment s05 = assess(canonical_scenario("paper-2005"));
  const Assessment s01 = assess(canonical_scenario("paper-2001"));
  c.within("scenario EVs, A, 2005", s05.ev_count.value(), 43.07e9, 1e-3);
  c.within("scenario batteries, A, 2005",
           demand(s05, Method::A, "NiMH").battery_count.value(), 172.28e9, 1e-3);
  c.within("scenario batteries, A, 2001",
           demand(s01, Method::A, "NiMH").battery_count.value(), 131.4e9, 2e-3);
  c.within("scenario batteries, B, 2005",
           demand(s05, Method::B, "NiMH").battery_count.value(), 198.12e9, 1e-3);
  c.within("scenario batteries, B, 2001",
           demand(s01, Method::B, "NiMH").battery_count.value(), 151.12e9, 1e-3);
}

void table3(Checker& c) {
  struct Row {
    Method m;
    const char* year;
    const char* chem;
    double printed;
  };
  const Row rows[] = {
      {Method::A, "paper-2005", "Pb-acid", 591},
      {Method::A, "paper-2001", "Pb-acid", 451},
      {Method::B, "paper-2005", "Pb-acid", 679.55},
      {Method::B, "paper-2001", "Pb-acid", 518.34},
      {Method::A, "paper-2005", "NiMH", 1236.45},
      {Method::A, "paper-2001", "NiMH", 943.55},
      {Method::B, "paper-2005", "NiMH", 1421.71},
      {Method::B, "paper-2001", "NiMH", 1084.44},
  };
  for (const Row& r : rows) {
    const Assessment a = assess_with(r.year, r.chem);
    const auto table = production_energy_table({demand(a, r.m, r.chem)});
    const auto& row = table.front();
    const std::string label = std::string(r.m == Method::A ? "A " : "B ") +
                              r.year + " " + r.chem;
    c.within(label + " mantissa", row.paper_mantissa.as("TWh"), r.printed, 2e-3);
    c.that(label + ": consistent != mantissa x 10^3 exactly",
           row.consistent.value() == row.paper_mantissa.value() * 1e3);
    c.that(label + ": consistent != count x manufacture energy exactly",
           row.consistent.value() ==
               demand(a, r.m, r.chem).battery_count.value() *
                   builtin_chemistry(r.chem).manufacture_energy.value());
  }
}

void table2(Checker& c) {
  const auto& cat = builtin_catalog();
  const auto p = catalog_stats(cat, CatalogField::Power);
  const auto s = catalog_stats(cat, CatalogField::MaxSpeed);
  const auto r = catalog_stats(cat, CatalogField::Range);
  c.that("median power != 112 kW", p.median == 112e3);
  c.that("median speed != 97.5 mph", s.median == 97.5);
  c.that("median range != 100 mi", r.median == 100);
  c.absolute("mean power (kW)", p.mean / 1e3, 118.7, 1);
  c.absolute("mean speed (mph)", s.mean, 90, 1);
  c.absolute("mean range (mi)", r.mean, 91, 1);
  c.within("mean power vs 118.71", p.mean / 1e3, 118.71, 1e-4);
  c.within("mean speed vs 89.375", s.mean, 89.375, 1e-12);
  c.within("mean range vs 90.67", r.mean, 90.67, 1e-4);
}

void shares(Checker& c) {
  const auto& mix = builtin_dataset("us2005").mix;
  const double fossil =
      source_group_energy(mix, {"coal", "natural_gas", "oil"}).as("TWh");
  const double nuclear = source_group_energy(mix, {"nuclear"}).as("TWh");
  c.within("fossil vs 2899.3 TWh", fossil, 2899.3, 1e-4);
  c.within("fossil vs 2895 TWh", fossil, 2895, 5e-3);
  c.within("nuclear vs 782.6 TWh", nuclear, 782.6, 1e-4);
  c.within("nuclear vs 783 TWh", nuclear, 783, 1e-3);
}

void co2(Checker& c) {
  const Mass m = Mass::in(2480, "Mt");
  const auto i = carbon_intensity(m, twh(4055));
  c.within("intensity vs 0.61159 Mt/TWh", i.as("Mt/TWh"), 0.61159, 1e-5);
  c.within("CO2 for 6374.17 TWh", additional_co2(twh(6374.17), i).as("Mt"),
           3900, 5e-3);
  c.that("closure: additional_co2(intensity, 4055 TWh) != 2480 Mt",
         additional_co2(twh(4055), i) == m);
  const Assessment a = assess(canonical_scenario("paper-2005"));
  c.within("scenario CO2", a.additional_co2.as("Mt"), 3900, 5e-3);
}

void water(Checker& c) {
  const auto& d = builtin_dataset("us2005");
  const Volume coal = water_use(twh(4953), d.mix.share_of("coal"),
                                WaterIntensity::in(480, "gal/MWh"));
  const Volume gas = water_use(twh(4953), d.mix.share_of("natural_gas"),
                               WaterIntensity::in(180, "gal/MWh"));
  c.that("coal share != 0.4970", d.mix.share_of("coal").value() == 0.4970);
  // Published trillions are consistent volumes x 10^3.
  c.within("coal, published scale, vs 1181.58e12 gal",
           coal.value() * kPublishedWaterScale / 1e12, 1181.58, 5e-3);
  c.within("gas, published scale, vs 167.6e12 gal",
           gas.value() * kPublishedWaterScale / 1e12, 167.6, 1e-3);
  c.within("coal, consistent, vs 1.18158e12 gal", coal.value() / 1e12, 1.18158,
           5e-3);

  const auto rep = report::reproduce({"sec6-water"}).front();
  c.that("sec6-water does not have two cells", rep.cells.size() == 2);
  if (rep.cells.size() != 2) return;
  const auto& cc = rep.cells[0];
  const auto& gc = rep.cells[1];
  c.that("coal cell does not pass", cc.pass);
  c.that("gas cell is not flagged as an erratum",
         gc.mode == report::CompareMode::Erratum && !gc.note.empty());
  c.that("gas cell expected != 336.11", gc.expected == 336.11);
  c.within("gas cell computed", gc.computed, 167.6, 1e-3);
  const std::string text =
      report::render_reproduction({rep}, report::Format::Text);
  c.that("text report does not show the flag",
         text.find("flagged") != std::string::npos &&
             text.find("erratum") != std::string::npos);
}

void strategy(Checker& c) {
  const auto s =
      sustainable_conversion_fraction(twh(4055), Fraction(0.30), twh(4953));
  c.within("renewable vs 1216.5", s.renewable_energy.as("TWh"), 1216.5, 1e-9);
  c.within("renewable vs 1216", s.renewable_energy.as("TWh"), 1216, 1e-3);
  c.within("fraction vs 0.2456", s.fraction, 0.2456, 1e-3);
  c.that("fraction does not round to 0.25", format_number(s.fraction, 2) == "0.25");
}

void deficit(Checker& c) {
  const Assessment a = assess(canonical_scenario("paper-2005"));
  c.within("total additional", a.total_additional_energy.as("TWh"), 6374.17,
           2e-3);
  c.within("ratio to baseline", a.deficit.ratio_to_baseline, 1.572, 2e-3);
  const auto d = capacity_deficit(twh(4953), twh(1421.17), twh(4055));
  c.within("engine ratio", d.ratio_to_baseline, 1.572, 2e-3);
}

void properties(Checker& c) {
  std::mt19937_64 rng(12);

  // Unit round trips.
  std::uniform_real_distribution<double> mag(0, 1e6);
  for (const Unit& u : units::all()) {
    const Unit& canon = units::canonical(u.dimension);
    for (int k = 0; k < 50; ++k) {
      const double m = mag(rng);
      const double back =
          convert(convert(AnyQuantity(m, u), canon.symbol), u.symbol).magnitude();
      if (rel_err(back, m) > 1e-12) {
        c.fail("unit round trip through " + std::string(u.symbol));
        break;
      }
    }
    if (!u.literal) continue;
    const double canonical = u.dimension == Dimension::Fraction
                                 ? mag(rng) / 1e6
                                 : mag(rng);
    const AnyQuantity q(canonical, canon);
    const AnyQuantity back = parse_quantity(format_quantity(q, u.symbol, 17));
    if (rel_err(back.canonical_value(), canonical) > 1e-12) {
      c.fail("parse/format round trip in " + std::string(u.symbol));
    }
  }

  // Homogeneity.
  std::uniform_real_distribution<double> kd(0, 10);
  const auto& ni = builtin_chemistry("NiMH");
  const auto ci = carbon_intensity(Mass::in(2480, "Mt"), twh(4055));
  for (int t = 0; t < 200; ++t) {
    const double k = kd(rng);
    const Energy x = twh(mag(rng) / 100 + 1);
    const double lhs[] = {
        fleet_energy_from_shares({x * k, Fraction(0.28), Fraction(0.61)}).value(),
        battery_demand_method_a(x * k, kwh(115), Count(4), ni).battery_count.value(),
        battery_demand_method_b(x * k, ni).production_energy.value(),
        additional_co2(x * k, ci).value(),
        water_use(x * k, Fraction(0.497), WaterIntensity::in(480, "gal/MWh")).value(),
        capacity_deficit(x * k, x * k, twh(4055)).total_required.value()};
    const double rhs[] = {
        fleet_energy_from_shares({x, Fraction(0.28), Fraction(0.61)}).value(),
        battery_demand_method_a(x, kwh(115), Count(4), ni).battery_count.value(),
        battery_demand_method_b(x, ni).production_energy.value(),
        additional_co2(x, ci).value(),
        water_use(x, Fraction(0.497), WaterIntensity::in(480, "gal/MWh")).value(),
        capacity_deficit(x, x, twh(4055)).total_required.value()};
    for (std::size_t i = 0; i < std::size(lhs); ++i) {
      if (k == 0 ? lhs[i] != 0 : rel_err(lhs[i], k * rhs[i]) > 1e-12) {
        c.fail("homogeneity of engine op #" + std::to_string(i));
      }
    }
  }

  // Method ratio.
  const double ratio =
      battery_demand_method_a(twh(4953), kwh(115), Count(4), ni).battery_count /
      battery_demand_method_b(twh(4953), ni).battery_count;
  c.within("method A/B ratio", ratio, 0.8696, 1e-3);
  c.within("method A/B ratio vs 172.28/198.12", ratio, 172.28 / 198.12, 1e-3);

  // Median oracle over 500 random catalogs.
  std::uniform_int_distribution<int> size(1, 50);
  std::uniform_real_distribution<double> val(1, 300);
  std::bernoulli_distribution present(0.7);
  for (int trial = 0; trial < 500; ++trial) {
    EvCatalog cat;
    std::vector<double> v;
    for (int i = 0, n = size(rng); i < n; ++i) {
      EvModel m{"m", {}, {}, {}};
      if (present(rng)) {
        m.power = Power(val(rng));
        v.push_back(m.power->value());
      }
      cat.models.push_back(m);
    }
    if (v.empty()) continue;
    std::sort(v.begin(), v.end());
    const double oracle = v.size() % 2 ? v[v.size() / 2]
                                       : (v[v.size() / 2 - 1] + v[v.size() / 2]) / 2;
    if (catalog_stats(cat, CatalogField::Power).median != oracle) {
      c.fail("median oracle mismatch in trial " + std::to_string(trial));
      break;
    }
  }

  // Sweep points against direct assessment.
  const Scenario& base = canonical_scenario("paper-2005");
  SweepSpec spec{"strategy.renewable_share",
                 Progression{AnyQuantity(0.0, "frac"), AnyQuantity(1.0, "frac"),
                             AnyQuantity(0.05, "frac")}};
  const auto points = sweep(base, spec);
  const auto values = sweep_values(spec);
  c.that("sweep length", points.size() == values.size());
  for (std::size_t i = 0; i < points.size() && i < values.size(); ++i) {
    if (!points[i].assessment ||
        *points[i].assessment !=
            assess(with_override(base, spec.path, values[i]))) {
      c.fail("sweep point " + std::to_string(i) + " differs from assess");
    }
  }

  // Byte-identical re-renders.
  const Assessment a = assess(base);
  for (auto f : {report::Format::Text, report::Format::Csv, report::Format::Json}) {
    if (report::render(a, f) != report::render(assess(base), f)) {
      c.fail("re-render differs");
    }
  }

  // Scenario serialization round trip.
  for (const char* name : {"paper-2005", "paper-2001"}) {
    const Scenario& s = canonical_scenario(name);
    if (!(load_scenario(render_scenario(s)) == s)) {
      c.fail(std::string("scenario round trip for ") + name);
    }
  }
}

void golden(Checker& c) {
  const auto path = source_path("tests/golden/reproduce_all.txt");
  const std::string expected = read_file(path);
  c.that("golden file missing or empty: " + path.string(), !expected.empty());
  const std::string actual = report::render_reproduction(
      report::reproduce(report::target_ids()), report::Format::Text);
  c.that("reproduce --all text output differs from the golden file",
         actual == expected);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "fleet energy, shares pipeline", shares_pipeline},
      {2, "fleet energy, gallons pipeline", gallons_pipeline},
      {3, "per-EV energy", per_ev},
      {4, "EV and battery counts", counts},
      {5, "battery production table and x10^3 closure", table3},
      {6, "vehicle catalog statistics", table2},
      {7, "generation by source group", shares},
      {8, "carbon intensity, additional CO2, closure", co2},
      {9, "freshwater, coal match and gas erratum flag", water},
      {10, "renewable conversion strategy", strategy},
      {11, "capacity deficit", deficit},
      {12, "property suites", properties},
      {13, "golden reproduction report", golden},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checker c;
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    if (c.failures().empty()) {
      std::printf("PASS %2d %s\n", cr.id, cr.title);
    } else {
      ++failed;
      std::printf("FAIL %2d %s: %s\n", cr.id, cr.title,
                  c.failures().front().c_str());
      for (std::size_t i = 1; i < c.failures().size(); ++i) {
        std::printf("        %s\n", c.failures()[i].c_str());
      }
    }
  }
  std::printf("%zu/%zu acceptance criteria passed\n",
              criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
