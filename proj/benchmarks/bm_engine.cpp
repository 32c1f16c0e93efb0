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

#include <benchmark/benchmark.h>

#include "evsust/engine.hpp"
#include "evsust/report.hpp"
#include "evsust/scenario.hpp"

namespace {

using namespace evsust;

void BM_ParseQuantity(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_quantity("113.1e9 gal"));
  }
}
BENCHMARK(BM_ParseQuantity);

void BM_FormatQuantity(benchmark::State& state) {
  const AnyQuantity q(4.9532e15, "Wh");
  for (auto _ : state) {
    benchmark::DoNotOptimize(format_quantity(q, "TWh", 5));
  }
}
BENCHMARK(BM_FormatQuantity);

void BM_LoadScenario(benchmark::State& state) {
  const std::string_view text = canonical_scenario_text("paper-2005");
  for (auto _ : state) {
    benchmark::DoNotOptimize(load_scenario(text));
  }
}
BENCHMARK(BM_LoadScenario);

void BM_Assess(benchmark::State& state) {
  const Scenario& s = canonical_scenario("paper-2005");
  for (auto _ : state) {
    benchmark::DoNotOptimize(assess(s));
  }
}
BENCHMARK(BM_Assess);

void BM_Sweep(benchmark::State& state) {
  const Scenario& s = canonical_scenario("paper-2005");
  const SweepSpec spec{"strategy.renewable_share",
                       Progression{AnyQuantity(0.0, "frac"),
                                   AnyQuantity(1.0, "frac"),
                                   AnyQuantity(1.0 / state.range(0), "frac")}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(s, spec, 1));
  }
  state.SetItemsProcessed(state.iterations() * (state.range(0) + 1));
}
BENCHMARK(BM_Sweep)->Arg(10)->Arg(1000);

void BM_Reproduce(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(report::render_reproduction(
        report::reproduce(report::target_ids()), report::Format::Text));
  }
}
BENCHMARK(BM_Reproduce);

}  // namespace

BENCHMARK_MAIN();
