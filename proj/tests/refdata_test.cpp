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

#include <algorithm>
#include <random>

#include "evsust/refdata.hpp"
#include "support.hpp"

using namespace evsust;
using evsust::test::rel_err;

namespace {

GridMix mix_of(std::vector<std::pair<std::string, double>> shares) {
  GridMix m;
  for (auto& [s, v] : shares) m.entries.push_back({s, Fraction(v)});
  m.total_generation = Energy::in(1000, "TWh");
  return m;
}

bool has_kind(const std::vector<MixViolation>& v, MixViolation::Kind k) {
  return std::any_of(v.begin(), v.end(),
                     [&](const MixViolation& x) { return x.kind == k; });
}

// Sort-based median, independent of catalog_stats.
double oracle_median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

}  // namespace

TEST_CASE("builtin datasets") {
  const auto& d5 = builtin_dataset("us2005");
  CHECK(d5.mix.total_generation.as("TWh") == 4055);
  CHECK(d5.total_consumption->as("TWh") == 29000);
  CHECK(d5.transport_share->value() == 0.28);
  CHECK(d5.fuel_share->value() == 0.61);
  CHECK(d5.co2_total.as("Mt") == 2480);
  CHECK(d5.mix.share_of("coal").value() == 0.4970);
  CHECK(d5.mix.share_of("natural_gas").value() == 0.1880);
  CHECK(d5.mix.share_of("oil").value() == 0.0300);
  CHECK(d5.mix.share_of("nuclear").value() == 0.1930);
  CHECK(d5.mix.share_of("hydro").value() == 0.0650);
  CHECK(d5.mix.share_of("other_renewables").value() == 0.0270);

  const double fossil = d5.mix.share_of("coal").value() +
                        d5.mix.share_of("natural_gas").value() +
                        d5.mix.share_of("oil").value();
  CHECK(fossil == doctest::Approx(0.715).epsilon(1e-12));
  CHECK(std::abs(fossil - 0.714) <= 0.002);

  const auto& d1 = builtin_dataset("us2001");
  CHECK(d1.household_gasoline->as("gal") == 113.1e9);

  CHECK_THROWS_AS(builtin_dataset("us1999"), Error);
  auto ids = builtin_dataset_ids();
  std::sort(ids.begin(), ids.end());
  CHECK(ids == std::vector<std::string>{"us2001", "us2005"});
  CHECK_FALSE(mix_share_provenance("us2005", "coal").empty());
}

TEST_CASE("validate_mix") {
  CHECK(validate_mix(builtin_dataset("us2005").mix).empty());
  CHECK(has_kind(validate_mix(mix_of({{"coal", 0.6}, {"natural_gas", 0.6}})),
                 MixViolation::Kind::SumNotOne));
  CHECK(has_kind(validate_mix(mix_of({{"coal", -0.1}, {"hydro", 1.1}})),
                 MixViolation::Kind::ShareOutOfRange));
  CHECK(has_kind(validate_mix(mix_of({{"coal", 0.5}, {"coal", 0.5}})),
                 MixViolation::Kind::DuplicateSource));
  CHECK(validate_mix(mix_of({{"coal", 0.5}, {"hydro", 0.5}})).empty());
}

TEST_CASE("source_group_energy") {
  const auto& mix = builtin_dataset("us2005").mix;
  const double fossil =
      source_group_energy(mix, {"coal", "natural_gas", "oil"}).as("TWh");
  CHECK(fossil == doctest::Approx(2899.325));
  CHECK(rel_err(fossil, 2895) <= 5e-3);
  const double nuclear = source_group_energy(mix, {"nuclear"}).as("TWh");
  CHECK(nuclear == doctest::Approx(782.615));
  CHECK(rel_err(nuclear, 783) <= 1e-3);
  CHECK(source_group_energy(mix, {}).value() == 0);
  CHECK_THROWS_AS(source_group_energy(mix, {"wind"}), Error);
}

TEST_CASE("property: a partition of the sources sums to total generation") {
  const auto& mix = builtin_dataset("us2005").mix;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> a, b;
    for (const auto& e : mix.entries) {
      (rng() % 2 ? a : b).push_back(e.source);
    }
    const double sum = (source_group_energy(mix, a) +
                        source_group_energy(mix, b)).value();
    CHECK(rel_err(sum, mix.total_generation.value()) <= 1e-9);
  }
}

TEST_CASE("chemistries") {
  const auto& pb = builtin_chemistry("Pb-acid");
  CHECK(pb.pack_capacity.as("kWh") == 25);
  CHECK(pb.manufacture_energy.as("kWh") == 3430);
  const auto& ni = builtin_chemistry("NiMH");
  CHECK(ni.manufacture_energy.as("kWh") == 7176);
  CHECK(ni.energy_density.value() * ni.pack_mass.as("kg") == 24750);
  CHECK(check_chemistry(pb).empty());
  CHECK(check_chemistry(ni).empty());

  BatteryChemistry bad = ni;
  bad.pack_capacity = Energy::in(30, "kWh");
  CHECK_FALSE(check_chemistry(bad).empty());
  bad = ni;
  bad.manufacture_energy = Energy(0);
  CHECK_FALSE(check_chemistry(bad).empty());
  CHECK_THROWS_AS(builtin_chemistry("Li-ion"), Error);
}

TEST_CASE("catalog statistics") {
  const auto& cat = builtin_catalog();
  CHECK(cat.models.size() == 10);

  const auto power = catalog_stats(cat, CatalogField::Power);
  CHECK(power.count_used == 9);
  CHECK(power.mean / 1e3 == doctest::Approx(118.71).epsilon(1e-4));
  CHECK(power.median == 112e3);

  const auto speed = catalog_stats(cat, CatalogField::MaxSpeed);
  CHECK(speed.count_used == 8);
  CHECK(speed.mean == 89.375);
  CHECK(speed.median == 97.5);

  const auto range = catalog_stats(cat, CatalogField::Range);
  CHECK(range.count_used == 9);
  CHECK(range.mean == doctest::Approx(816.0 / 9));
  CHECK(range.median == 100);

  CHECK_THROWS_AS(catalog_stats(EvCatalog{{EvModel{"x", {}, {}, {}}}},
                                CatalogField::Power),
                  Error);
}

TEST_CASE("property: median matches a sort-based oracle") {
  std::mt19937_64 rng(500);
  std::uniform_int_distribution<int> size(1, 50);
  std::uniform_real_distribution<double> val(1.0, 300.0);
  std::bernoulli_distribution present(0.7);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    EvCatalog cat;
    std::vector<double> powers, speeds, ranges;
    const int n = size(rng);
    for (int i = 0; i < n; ++i) {
      EvModel m{"m" + std::to_string(i), {}, {}, {}};
      if (present(rng)) {
        m.power = Power(val(rng));
        powers.push_back(m.power->value());
      }
      if (present(rng)) {
        m.max_speed = Speed(val(rng));
        speeds.push_back(m.max_speed->value());
      }
      if (present(rng)) {
        const double lo = val(rng);
        const double hi = present(rng) ? lo : lo + val(rng);
        m.range = RangeInterval{Distance(lo), Distance(hi)};
        ranges.push_back(m.range->midpoint().value());
      }
      cat.models.push_back(m);
    }
    const std::pair<CatalogField, std::vector<double>*> fields[] = {
        {CatalogField::Power, &powers},
        {CatalogField::MaxSpeed, &speeds},
        {CatalogField::Range, &ranges}};
    for (auto [field, values] : fields) {
      if (values->empty()) {
        CHECK_THROWS_AS(catalog_stats(cat, field), Error);
        continue;
      }
      const auto st = catalog_stats(cat, field);
      CHECK(st.count_used == values->size());
      CHECK(st.median == oracle_median(*values));
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("self check of the shipped data") {
  CHECK(self_check().empty());
  for (const auto& id : builtin_dataset_ids()) {
    CHECK(check_dataset(builtin_dataset(id)).empty());
  }
}
