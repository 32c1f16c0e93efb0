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

#include <cmath>
#include <compare>
#include <span>
#include <string>
#include <string_view>

#include "evsust/error.hpp"

namespace evsust {

enum class Dimension {
  Energy,           // Wh
  Power,            // W
  Speed,            // mi/h
  Distance,         // mi
  Volume,           // US gal
  Mass,             // metric t
  Count,            // 1
  Fraction,         // 1, in [0, 1]
  CarbonIntensity,  // t/Wh
  WaterIntensity,   // gal/Wh
  HeatContent,      // Btu/gal
  SpecificEnergy,   // Wh/kg
  BtuEquivalence,   // Wh/Btu
  Scalar,           // bare decimal in a scenario file
};

std::string_view to_string(Dimension dimension);

// A named unit. Conversion to the canonical unit of its dimension is
// magnitude * numerator / denominator; both factors are exact doubles.
struct Unit {
  std::string_view symbol;
  Dimension dimension;
  double numerator;
  double denominator;
  bool literal;  // accepted by parse_quantity
  bool glued;    // rendered without a space after the number ("172.3e9")

  double to_canonical(double magnitude) const {
    return magnitude * numerator / denominator;
  }
  double from_canonical(double canonical) const {
    return canonical * denominator / numerator;
  }
  bool operator==(const Unit& other) const { return symbol == other.symbol; }
};

namespace units {

// Immutable unit table.
std::span<const Unit> all();

// Throws Error(UnknownUnit).
const Unit& find(std::string_view symbol);
const Unit* try_find(std::string_view symbol) noexcept;
const Unit& canonical(Dimension dimension);

inline constexpr double kWhPerKWh = 1e3;
inline constexpr double kWhPerMWh = 1e6;
inline constexpr double kWhPerTWh = 1e12;

// Btu -> Wh. The commonly quoted rounded value and the exact-to-six-digit
// value; 113.1e9 gal of gasoline lands on 3778 TWh only with the latter.
inline constexpr double kBtuToWhRounded = 0.2929;
inline constexpr double kBtuToWhExact = 0.293071;

inline constexpr double kGasolineHeatContentBtuPerGal = 114000.0;

}  // namespace units

enum class BtuConstant { Exact, Rounded };

constexpr double btu_to_wh(BtuConstant c) {
  return c == BtuConstant::Exact ? units::kBtuToWhExact
                                 : units::kBtuToWhRounded;
}

// Energy in Wh of `btu` British thermal units under the chosen constant.
constexpr double btu_to_energy_wh(double btu, BtuConstant c) {
  return btu * btu_to_wh(c);
}

namespace detail {
inline void require_finite(double v) {
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::NotFinite, "quantity magnitude is not finite");
  }
}
}  // namespace detail

// Compile-time dimensioned value held in the canonical unit of D.
template <Dimension D>
class Quantity {
 public:
  static constexpr Dimension dimension = D;

  constexpr Quantity() = default;
  constexpr explicit Quantity(double canonical) : value_(canonical) {
    if (!std::is_constant_evaluated()) detail::require_finite(canonical);
  }

  // Magnitude expressed in `unit`, which must belong to D.
  static Quantity in(double magnitude, std::string_view unit) {
    const Unit& u = units::find(unit);
    check(u);
    return Quantity(u.to_canonical(magnitude));
  }

  constexpr double value() const { return value_; }

  double as(std::string_view unit) const {
    const Unit& u = units::find(unit);
    check(u);
    return u.from_canonical(value_);
  }

  constexpr Quantity operator+(Quantity o) const {
    return Quantity(value_ + o.value_);
  }
  constexpr Quantity operator-(Quantity o) const {
    return Quantity(value_ - o.value_);
  }
  constexpr Quantity operator*(double k) const { return Quantity(value_ * k); }
  constexpr Quantity operator/(double k) const { return Quantity(value_ / k); }
  friend constexpr Quantity operator*(double k, Quantity q) { return q * k; }
  constexpr double operator/(Quantity o) const { return value_ / o.value_; }

  constexpr bool operator==(const Quantity&) const = default;
  constexpr auto operator<=>(const Quantity&) const = default;

 private:
  static void check(const Unit& u) {
    if (u.dimension != D) {
      throw Error(ErrorKind::DimensionMismatch,
                  "unit '" + std::string(u.symbol) + "' is " +
                      std::string(to_string(u.dimension)) + ", expected " +
                      std::string(to_string(D)));
    }
  }

  double value_ = 0.0;
};

using Energy = Quantity<Dimension::Energy>;
using Power = Quantity<Dimension::Power>;
using Speed = Quantity<Dimension::Speed>;
using Distance = Quantity<Dimension::Distance>;
using Volume = Quantity<Dimension::Volume>;
using Mass = Quantity<Dimension::Mass>;
using Count = Quantity<Dimension::Count>;
using Fraction = Quantity<Dimension::Fraction>;
using CarbonIntensity = Quantity<Dimension::CarbonIntensity>;
using WaterIntensity = Quantity<Dimension::WaterIntensity>;
using HeatContent = Quantity<Dimension::HeatContent>;
using SpecificEnergy = Quantity<Dimension::SpecificEnergy>;

namespace literals {
constexpr Energy operator""_Wh(long double v) { return Energy(double(v)); }
constexpr Energy operator""_kWh(long double v) { return Energy(double(v) * 1e3); }
constexpr Energy operator""_TWh(long double v) { return Energy(double(v) * 1e12); }
constexpr Energy operator""_TWh(unsigned long long v) { return Energy(double(v) * 1e12); }
constexpr Energy operator""_kWh(unsigned long long v) { return Energy(double(v) * 1e3); }
}  // namespace literals

// Runtime-dimensioned quantity: a magnitude in a named unit.
class AnyQuantity {
 public:
  AnyQuantity(double magnitude, const Unit& unit)
      : magnitude_(magnitude), unit_(&unit) {
    detail::require_finite(magnitude);
  }
  AnyQuantity(double magnitude, std::string_view unit)
      : AnyQuantity(magnitude, units::find(unit)) {}

  template <Dimension D>
  AnyQuantity(Quantity<D> q)  // NOLINT(google-explicit-constructor)
      : AnyQuantity(q.value(), units::canonical(D)) {}

  double magnitude() const { return magnitude_; }
  const Unit& unit() const { return *unit_; }
  Dimension dimension() const { return unit_->dimension; }
  double canonical_value() const { return unit_->to_canonical(magnitude_); }

  // Throws DimensionMismatch. Scalar coerces into Fraction and Count.
  template <Dimension D>
  Quantity<D> as() const {
    if (dimension() != D &&
        !(dimension() == Dimension::Scalar &&
          (D == Dimension::Fraction || D == Dimension::Count))) {
      throw Error(ErrorKind::DimensionMismatch,
                  std::string("expected ") + std::string(to_string(D)) +
                      ", got " + std::string(to_string(dimension())));
    }
    return Quantity<D>(canonical_value());
  }

  bool operator==(const AnyQuantity& o) const {
    return magnitude_ == o.magnitude_ && *unit_ == *o.unit_;
  }

 private:
  double magnitude_;
  const Unit* unit_;
};

// Re-expresses q in target_unit. Throws UnknownUnit, DimensionMismatch.
AnyQuantity convert(const AnyQuantity& q, std::string_view target_unit);

// Parses `NUMBER WS? UNIT` into the canonical unit of UNIT's dimension.
// `%` maps to Fraction / 100. Throws ParseError (with byte offset),
// UnknownUnit, NegativeWherePhysical.
AnyQuantity parse_quantity(std::string_view text);

// Parses a bare decimal (no unit). Throws ParseError.
double parse_number(std::string_view text);

// sig_digits significant digits, ties to even, trailing zeros dropped.
// Fixed notation for decimal exponents in [-5, 15), otherwise d.ddde<exp>.
std::string format_number(double value, int sig_digits);

// format_number of q in `unit`, followed by the unit symbol.
std::string format_quantity(const AnyQuantity& q, std::string_view unit,
                            int sig_digits);

// Shortest decimal that reads back to exactly `value`, with engineering
// exponents outside [1e-3, 1e6) ("113.1e9").
std::string format_shortest(double value);

}  // namespace evsust
