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

#include <doctest.h>

#include <random>

#include "evsust/scenario.hpp"
#include "support.hpp"

using namespace evsust;
using evsust::test::read_file;
using evsust::test::rel_err;
using evsust::test::source_path;

namespace {

const Scenario& paper2005() { return canonical_scenario("paper-2005"); }
const Scenario& paper2001() { return canonical_scenario("paper-2001"); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Io;
}

const engine::BatteryDemand& demand(const Assessment& a, engine::Method m) {
  for (const auto& d : a.demands) {
    if (d.method == m) return d;
  }
  throw Error(ErrorKind::InvalidArgument, "method not evaluated");
}

SweepSpec list_sweep(std::string path, std::vector<std::string> values) {
  SweepSpec spec{std::move(path), std::vector<AnyQuantity>{}};
  auto& v = std::get<std::vector<AnyQuantity>>(spec.values);
  for (const auto& s : values) v.push_back(parse_literal(s));
  return spec;
}

bool has_note(const Assessment& a, std::string_view field) {
  for (const auto& n : a.notes) {
    if (n.field == field) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("shipped scenario files match the embedded copies") {
  CHECK(read_file(source_path("scenarios/paper-2005.scn")) ==
        canonical_scenario_text("paper-2005"));
  CHECK(read_file(source_path("scenarios/paper-2001.scn")) ==
        canonical_scenario_text("paper-2001"));
  CHECK(load_scenario_file(source_path("scenarios/paper-2005.scn")) ==
        paper2005());
}

TEST_CASE("load_scenario: paper-2005") {
  const Scenario& s = paper2005();
  CHECK(s.name == "paper-2005");
  CHECK(s.dataset_ref == "us2005");
  const auto* shares = std::get_if<engine::SharesBasis>(&s.fleet);
  REQUIRE(shares);
  CHECK(shares->total_energy.as("TWh") == 29000);
  CHECK(shares->transport_share.value() == doctest::Approx(0.28));
  CHECK(shares->fuel_share.value() == doctest::Approx(0.61));
  CHECK(s.chemistry == "NiMH");
  CHECK(s.batteries_per_ev.value() == 4);
  CHECK(s.method == MethodSelection::Both);
  CHECK(s.convention == BatteryConvention::PaperMantissa);
  CHECK(s.renewable_share.value() == doctest::Approx(0.30));
  CHECK(s.baseline_generation.as("TWh") == 4055);
}

TEST_CASE("load_scenario: syntax errors") {
  CHECK(kind_of([] { load_scenario(""); }) == ErrorKind::Parse);
  CHECK(kind_of([] { load_scenario("# only a comment\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { load_scenario("[meta\nname = x\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { load_scenario("[meta]\ndataset = us2005\nbogus = 1\n"); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { load_scenario("[meta]\ndataset = us2005\n[nowhere]\n"); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] {
          load_scenario("[meta]\ndataset = us2005\n[fleet]\ntotal_energy = 5 parsec\n");
        }) == ErrorKind::Parse);
  try {
    load_scenario("[meta]\ndataset = us2005\n[ev]\npower 12 kW\n");
    FAIL("accepted an entry without '='");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() >= 1);
  }
}

TEST_CASE("load_scenario: semantic errors") {
  CHECK(kind_of([] { load_scenario("[meta]\ndataset = us1999\n"); }) ==
        ErrorKind::UnknownDataset);
  CHECK(kind_of([] {
          load_scenario("[meta]\ndataset = us2005\n[battery]\nchemistry = Li-ion\n");
        }) == ErrorKind::UnknownChemistry);
  CHECK(kind_of([] {
          load_scenario("[meta]\ndataset = us2005\n[strategy]\nrenewable_share = 130 %\n");
        }) == ErrorKind::Validation);
  CHECK(kind_of([] {
          load_scenario("[meta]\ndataset = us2005\n[battery]\nbatteries_per_ev = 0\n");
        }) == ErrorKind::Validation);
  CHECK(kind_of([] {
          load_scenario("[meta]\ndataset = us2005\n[strategy]\nbaseline_generation = 4 gal\n");
        }) == ErrorKind::Validation);
  try {
    load_scenario_file(source_path("scenarios/bad-mix.scn"));
    FAIL("bad mix accepted");
  } catch (const ValidationError& e) {
    CHECK_FALSE(e.violations().empty());
  }
  CHECK(kind_of([] { load_scenario_file(source_path("scenarios/missing.scn")); }) ==
        ErrorKind::Io);
}

TEST_CASE("load_scenario: defaults and overrides") {
  const Scenario s = load_scenario(
      "[meta]\ndataset = us2005\n[strategy]\nrenewable_share = \"30 %\"\n");
  CHECK(s.renewable_share.value() == doctest::Approx(0.30));
  const Scenario plain = load_scenario("[meta]\ndataset = us2005\n");
  CHECK(plain == default_scenario("us2005"));
  CHECK(plain.renewable_share.value() == doctest::Approx(0.30));
  CHECK(std::holds_alternative<CatalogMedian>(plain.ev));
  CHECK(std::holds_alternative<engine::SharesBasis>(plain.fleet));
  CHECK(std::holds_alternative<engine::GallonsBasis>(
      default_scenario("us2001").fleet));
}

TEST_CASE("assess: paper-2005") {
  const Assessment a = assess(paper2005());
  CHECK(a.fleet_energy.as("TWh") == doctest::Approx(4953.2));
  CHECK(rel_err(a.total_additional_energy.as("TWh"), 6374.17) <= 2e-3);
  CHECK(a.additional_co2.as("Mt") == doctest::Approx(3898).epsilon(1e-3));
  CHECK(rel_err(a.ev_count.value(), 43.07e9) <= 1e-3);
  REQUIRE(a.water.size() == 2);
  CHECK(a.water[0].fuel == "coal");
  REQUIRE(a.strategy.has_value());
  CHECK(a.strategy->fraction == doctest::Approx(0.2456).epsilon(1e-3));
  CHECK(has_note(a, "water.natural_gas"));
  CHECK(has_note(a, "battery energy"));
}

TEST_CASE("assess: paper-2001") {
  const Assessment a = assess(paper2001());
  CHECK(a.fleet_energy.as("TWh") == doctest::Approx(3778.7).epsilon(1e-4));
  CHECK(rel_err(demand(a, engine::Method::B).battery_count.value(), 151.12e9) <=
        1e-3);
  CHECK(demand(a, engine::Method::B).battery_count.value() ==
        doctest::Approx(151.15e9).epsilon(1e-4));
}

TEST_CASE("assess: zero transport share propagates zeros") {
  Scenario s = with_override(paper2005(), "fleet.transport_share",
                             AnyQuantity(0.0, "frac"));
  const Assessment a = assess(s);
  CHECK(a.fleet_energy.value() == 0);
  CHECK(a.ev_count.value() == 0);
  for (const auto& d : a.demands) {
    CHECK(d.battery_count.value() == 0);
    CHECK(d.production_energy.value() == 0);
  }
  CHECK(a.battery_energy.value() == 0);
  CHECK(a.total_additional_energy.value() == 0);
  CHECK(a.additional_co2.value() == 0);
  for (const auto& w : a.water) CHECK(w.volume.value() == 0);
  CHECK_FALSE(a.strategy.has_value());
  CHECK(a.deficit.deficit.value() == 0);
}

TEST_CASE("assess: errors name the offending field") {
  Scenario s = paper2005();
  s.ev = EvTriple{Power::in(112, "kW"), Distance(100), Speed(0)};
  try {
    assess(s);
    FAIL("zero speed accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroSpeed);
    CHECK(std::string(e.what()).find("ev") != std::string::npos);
  }
}

TEST_CASE("property: assess is referentially transparent") {
  CHECK(assess(paper2005()) == assess(paper2005()));
  Scenario copy = paper2001();
  CHECK(assess(copy) == assess(paper2001()));
}

TEST_CASE("property: render_scenario round-trips") {
  std::vector<Scenario> cases = {paper2005(), paper2001(),
                                 default_scenario("us2005"),
                                 default_scenario("us2001")};
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> frac(0, 1), e(1, 1e5), n(1, 10);
  for (int k = 0; k < 40; ++k) {
    Scenario s = paper2005();
    s = with_override(s, "strategy.renewable_share", AnyQuantity(frac(rng), "frac"));
    s = with_override(s, "strategy.baseline_generation", AnyQuantity(e(rng), "TWh"));
    s = with_override(s, "battery.batteries_per_ev", AnyQuantity(n(rng), "scalar"));
    s = with_override(s, "ev.per_ev_energy", AnyQuantity(e(rng) / 100, "kWh"));
    s = with_override(s, "water.coal", AnyQuantity(e(rng) / 10, "gal/MWh"));
    cases.push_back(s);
  }
  Scenario triple = paper2005();
  triple.ev = EvTriple{Power::in(215, "kW"), Distance(227), Speed(125)};
  cases.push_back(triple);
  Scenario inline_ds = load_scenario(render_dataset(builtin_dataset("us2005")));
  cases.push_back(inline_ds);

  for (const Scenario& s : cases) {
    const std::string text = render_scenario(s);
    const Scenario back = load_scenario(text);
    CHECK(back == s);
    CHECK(render_scenario(back) == text);
  }
}

TEST_CASE("exported dataset reproduces the built-in assessment") {
  const Scenario inline_ds = load_scenario(render_dataset(builtin_dataset("us2005")));
  CHECK(inline_ds.dataset == builtin_dataset("us2005"));
  const Assessment a = assess(inline_ds);
  const Assessment b = assess(default_scenario("us2005"));
  CHECK(a.fleet_energy == b.fleet_energy);
  CHECK(a.total_additional_energy == b.total_additional_energy);
  CHECK(a.additional_co2 == b.additional_co2);
  CHECK(a.deficit == b.deficit);
}

TEST_CASE("sweep over renewable share") {
  const auto points =
      sweep(paper2005(), list_sweep("strategy.renewable_share", {"0.1", "0.2", "0.3"}));
  REQUIRE(points.size() == 3);
  const double expected[] = {0.0819, 0.1637, 0.2456};
  for (std::size_t i = 0; i < 3; ++i) {
    REQUIRE(points[i].assessment.has_value());
    CHECK(points[i].assessment->strategy->fraction ==
          doctest::Approx(expected[i]).epsilon(1e-3));
  }
}

TEST_CASE("single-value sweep equals assess with the override") {
  const auto points =
      sweep(paper2005(), list_sweep("strategy.renewable_share", {"0.3"}));
  REQUIRE(points.size() == 1);
  CHECK(*points[0].assessment ==
        assess(with_override(paper2005(), "strategy.renewable_share",
                             parse_literal("0.3"))));
}

TEST_CASE("sweep over batteries per EV") {
  const auto points =
      sweep(paper2005(), list_sweep("battery.batteries_per_ev", {"1", "2", "4"}));
  const double expected[] = {43.07e9, 86.14e9, 172.28e9};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(rel_err(demand(*points[i].assessment, engine::Method::A)
                      .battery_count.value(),
                  expected[i]) <= 1e-3);
  }
}

TEST_CASE("progression sweeps") {
  SweepSpec spec{"strategy.renewable_share",
                 Progression{parse_literal("0.1"), parse_literal("0.3"),
                             parse_literal("0.1")}};
  const auto values = sweep_values(spec);
  REQUIRE(values.size() == 3);
  CHECK(values[2].canonical_value() == doctest::Approx(0.3));

  SweepSpec zero{"strategy.renewable_share",
                 Progression{parse_literal("0.1"), parse_literal("0.3"),
                             parse_literal("0")}};
  CHECK(kind_of([&] { sweep_values(zero); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { sweep(paper2005(), zero); }) == ErrorKind::InvalidArgument);

  SweepSpec down{"strategy.baseline_generation",
                 Progression{parse_literal("5000 TWh"), parse_literal("4000 TWh"),
                             AnyQuantity(-500.0, "TWh")}};
  CHECK(sweep_values(down).size() == 3);
}

TEST_CASE("sweep records per-point errors") {
  const auto points =
      sweep(paper2005(), list_sweep("strategy.renewable_share", {"0.2", "1.5", "0.3"}));
  REQUIRE(points.size() == 3);
  CHECK(points[0].assessment.has_value());
  CHECK_FALSE(points[1].assessment.has_value());
  CHECK_FALSE(points[1].error.empty());
  CHECK(points[2].assessment.has_value());
}

TEST_CASE("sweep rejects unknown paths and mismatched units") {
  CHECK(kind_of([] {
          sweep(paper2005(), list_sweep("strategy.moonshot", {"1"}));
        }) == ErrorKind::UnknownParameter);
  CHECK(kind_of([] {
          sweep(paper2005(), list_sweep("strategy.baseline_generation", {"3 gal"}));
        }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("property: sweep point i equals assess with override i") {
  std::vector<std::string> values;
  for (int k = 0; k <= 20; ++k) values.push_back(std::to_string(3000 + 100 * k) + " TWh");
  const SweepSpec spec = list_sweep("strategy.baseline_generation", values);
  for (unsigned threads : {1u, 4u, 0u}) {
    const auto points = sweep(paper2005(), spec, threads);
    REQUIRE(points.size() == values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      CHECK(points[i].value == parse_literal(values[i]));
      CHECK(*points[i].assessment ==
            assess(with_override(paper2005(), "strategy.baseline_generation",
                                 parse_literal(values[i]))));
    }
  }
}
