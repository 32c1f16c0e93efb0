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

#include <string>
#include <string_view>
#include <vector>

#include "evsust/scenario.hpp"

namespace evsust::report {

enum class Format { Text, Csv, Json };

// Throws InvalidArgument for anything but text, csv, json.
Format parse_format(std::string_view name);

struct SigDigits {
  int energy = 5;    // TWh, kWh
  int count = 4;     // units of 10^9
  int fraction = 3;
  int other = 5;

  static SigDigits uniform(int n) { return {n, n, n, n}; }
};

// Byte-deterministic for a given (assessment, format, digits).
std::string render(const Assessment& a, Format format,
                   const SigDigits& digits = {});

std::string render_sweep(const std::vector<SweepPoint>& points,
                         std::string_view path, Format format,
                         const SigDigits& digits = {});

enum class CompareMode {
  Relative,  // |computed - expected| / |expected| <= tolerance
  Absolute,  // |computed - expected| <= tolerance
  Exact,     // computed == expected
  RoundSig,  // computed rounded to `tolerance` significant digits == expected
  Erratum,   // published value is known to be irreproducible; flagged
};

enum class CellKind { Energy, Count, Fraction, Other };

struct Cell {
  std::string label;
  double computed = 0.0;
  double expected = 0.0;
  std::string unit;  // display unit of computed and expected
  CellKind kind = CellKind::Other;
  CompareMode mode = CompareMode::Relative;
  double tolerance = 0.0;
  double relative_error = 0.0;
  bool pass = false;
  std::string anchor;  // where the expected value is published
  std::string source;  // "published" or "derived"
  std::string note;    // erratum or methodology remark
};

struct ComparisonResult {
  std::string target;
  std::string title;
  std::vector<Cell> cells;

  std::size_t passed() const;
  bool all_pass() const;
};

// table2-stats, table3, sec3-shares, sec4-energies, sec5-counts, sec6-co2,
// sec6-water, sec7-strategy, sec8-deficit.
const std::vector<std::string>& target_ids();

// Evaluates the canonical scenarios and compares each target's cells, in
// the order given. Throws UnknownTarget.
std::vector<ComparisonResult> reproduce(const std::vector<std::string>& targets);

std::string render_reproduction(const std::vector<ComparisonResult>& results,
                                Format format, const SigDigits& digits = {});

// CSV field with RFC 4180 minimal quoting.
std::string csv_field(std::string_view s);

}  // namespace evsust::report
