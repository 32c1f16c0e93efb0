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

#include "evsust/quantity.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <system_error>

namespace evsust {

std::string_view to_string(Dimension dimension) {
  switch (dimension) {
    case Dimension::Energy: return "Energy";
    case Dimension::Power: return "Power";
    case Dimension::Speed: return "Speed";
    case Dimension::Distance: return "Distance";
    case Dimension::Volume: return "Volume";
    case Dimension::Mass: return "Mass";
    case Dimension::Count: return "Count";
    case Dimension::Fraction: return "Fraction";
    case Dimension::CarbonIntensity: return "CarbonIntensity";
    case Dimension::WaterIntensity: return "WaterIntensity";
    case Dimension::HeatContent: return "HeatContent";
    case Dimension::SpecificEnergy: return "SpecificEnergy";
    case Dimension::BtuEquivalence: return "BtuEquivalence";
    case Dimension::Scalar: return "Scalar";
  }
  return "?";
}

namespace units {
namespace {

using D = Dimension;

// First entry of each dimension is its canonical unit.
constexpr std::array kUnits{
    Unit{"Wh", D::Energy, 1, 1, true, false},
    Unit{"kWh", D::Energy, 1e3, 1, true, false},
    Unit{"MWh", D::Energy, 1e6, 1, true, false},
    Unit{"TWh", D::Energy, 1e12, 1, true, false},
    Unit{"W", D::Power, 1, 1, true, false},
    Unit{"kW", D::Power, 1e3, 1, true, false},
    Unit{"mph", D::Speed, 1, 1, true, false},
    Unit{"mi", D::Distance, 1, 1, true, false},
    Unit{"gal", D::Volume, 1, 1, true, false},
    Unit{"e9 gal", D::Volume, 1e9, 1, false, true},
    Unit{"e12 gal", D::Volume, 1e12, 1, false, true},
    Unit{"t", D::Mass, 1, 1, true, false},
    Unit{"Mt", D::Mass, 1e6, 1, true, false},
    Unit{"kg", D::Mass, 1, 1e3, true, false},
    Unit{"", D::Count, 1, 1, false, true},
    Unit{"e9", D::Count, 1e9, 1, false, true},
    Unit{"frac", D::Fraction, 1, 1, true, false},
    Unit{"%", D::Fraction, 1, 100, true, false},
    Unit{"t/Wh", D::CarbonIntensity, 1, 1, false, false},
    Unit{"Mt/TWh", D::CarbonIntensity, 1e6, 1e12, true, false},
    Unit{"gal/Wh", D::WaterIntensity, 1, 1, false, false},
    Unit{"gal/MWh", D::WaterIntensity, 1, 1e6, true, false},
    Unit{"Btu/gal", D::HeatContent, 1, 1, true, false},
    Unit{"Wh/kg", D::SpecificEnergy, 1, 1, true, false},
    Unit{"Wh/Btu", D::BtuEquivalence, 1, 1, true, false},
    Unit{"scalar", D::Scalar, 1, 1, false, true},
};

}  // namespace

std::span<const Unit> all() { return kUnits; }

const Unit* try_find(std::string_view symbol) noexcept {
  auto it = std::find_if(kUnits.begin(), kUnits.end(),
                         [&](const Unit& u) { return u.symbol == symbol; });
  return it == kUnits.end() ? nullptr : &*it;
}

const Unit& find(std::string_view symbol) {
  if (const Unit* u = try_find(symbol)) return *u;
  throw Error(ErrorKind::UnknownUnit,
              "unknown unit '" + std::string(symbol) + "'");
}

const Unit& canonical(Dimension dimension) {
  auto it = std::find_if(kUnits.begin(), kUnits.end(), [&](const Unit& u) {
    return u.dimension == dimension;
  });
  return *it;
}

}  // namespace units

AnyQuantity convert(const AnyQuantity& q, std::string_view target_unit) {
  const Unit& target = units::find(target_unit);
  if (target.dimension != q.dimension()) {
    throw Error(ErrorKind::DimensionMismatch,
                "cannot convert " + std::string(to_string(q.dimension())) +
                    " to '" + std::string(target.symbol) + "' (" +
                    std::string(to_string(target.dimension)) + ")");
  }
  if (target == q.unit()) return q;
  return AnyQuantity(target.from_canonical(q.canonical_value()), target);
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct ScannedNumber {
  double value;
  std::size_t end;
};

// Scans a decimal starting at `pos`; throws ParseError with the byte offset
// of the first offending character.
ScannedNumber scan_number(std::string_view text, std::size_t pos) {
  const std::size_t start = pos;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t digits_start = pos;
  std::size_t digits = 0;
  while (pos < text.size() && is_digit(text[pos])) ++pos, ++digits;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos, ++digits;
  }
  if (digits == 0) throw ParseError("expected a number", start);
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    std::size_t exp = pos + 1;
    if (exp < text.size() && (text[exp] == '+' || text[exp] == '-')) ++exp;
    if (exp >= text.size() || !is_digit(text[exp])) {
      throw ParseError("malformed exponent", exp);
    }
    while (exp < text.size() && is_digit(text[exp])) ++exp;
    pos = exp;
  }
  double value = 0.0;
  const char* first = text.data() + digits_start;
  const char* last = text.data() + pos;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("number out of range", start);
  }
  if (ec != std::errc() || ptr != last) {
    throw ParseError("malformed number", start);
  }
  return {negative ? -value : value, pos};
}

}  // namespace

double parse_number(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  auto [value, end] = scan_number(text, pos);
  std::size_t tail = end;
  while (tail < text.size() && is_space(text[tail])) ++tail;
  if (tail != text.size()) throw ParseError("unexpected trailing text", tail);
  return value == 0.0 ? 0.0 : value;
}

AnyQuantity parse_quantity(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (pos == text.size()) throw ParseError("empty quantity literal", pos);
  auto [value, end] = scan_number(text, pos);
  pos = end;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  std::size_t unit_end = text.size();
  while (unit_end > pos && is_space(text[unit_end - 1])) --unit_end;
  if (pos == unit_end) throw ParseError("missing unit", pos);
  const std::string_view symbol = text.substr(pos, unit_end - pos);
  const Unit* unit = units::try_find(symbol);
  if (unit == nullptr || !unit->literal) {
    throw Error(ErrorKind::UnknownUnit,
                "unknown unit '" + std::string(symbol) + "' at offset " +
                    std::to_string(pos));
  }
  if (value < 0.0) {
    throw Error(ErrorKind::NegativeWherePhysical,
                "negative " + std::string(to_string(unit->dimension)) + " '" +
                    std::string(text) + "'");
  }
  const double canonical = unit->to_canonical(value == 0.0 ? 0.0 : value);
  if (!std::isfinite(canonical)) {
    throw ParseError("quantity overflows", 0);
  }
  return AnyQuantity(canonical, units::canonical(unit->dimension));
}

namespace {

struct Decimal {
  bool negative = false;
  std::string digits;  // no leading/trailing zeros, at least one digit
  int exponent = 0;    // value = 0.d1d2d3... * 10^(exponent + 1)
};

// Splits the output of to_chars(scientific) into sign, digits, exponent.
Decimal split_scientific(std::string_view s) {
  Decimal d;
  std::size_t i = 0;
  if (s[i] == '-') {
    d.negative = true;
    ++i;
  }
  const std::size_t e = s.find('e', i);
  for (std::size_t k = i; k < e; ++k) {
    if (s[k] != '.') d.digits.push_back(s[k]);
  }
  d.exponent = std::atoi(std::string(s.substr(e + 1)).c_str());
  while (d.digits.size() > 1 && d.digits.back() == '0') d.digits.pop_back();
  return d;
}

std::string render_fixed(const Decimal& d) {
  std::string out = d.negative ? "-" : "";
  const int n = static_cast<int>(d.digits.size());
  if (d.exponent >= 0) {
    const int int_len = d.exponent + 1;
    if (n <= int_len) {
      out += d.digits;
      out.append(static_cast<std::size_t>(int_len - n), '0');
    } else {
      out += d.digits.substr(0, static_cast<std::size_t>(int_len));
      out += '.';
      out += d.digits.substr(static_cast<std::size_t>(int_len));
    }
  } else {
    out += "0.";
    out.append(static_cast<std::size_t>(-d.exponent - 1), '0');
    out += d.digits;
  }
  return out;
}

// Mantissa with `lead` digits before the point, then e<exponent - lead + 1>.
std::string render_exponent(const Decimal& d, int lead) {
  std::string out = d.negative ? "-" : "";
  std::string digits = d.digits;
  if (static_cast<int>(digits.size()) < lead) {
    digits.append(static_cast<std::size_t>(lead) - digits.size(), '0');
  }
  out += digits.substr(0, static_cast<std::size_t>(lead));
  if (static_cast<int>(digits.size()) > lead) {
    out += '.';
    out += digits.substr(static_cast<std::size_t>(lead));
  }
  out += 'e';
  out += std::to_string(d.exponent - lead + 1);
  return out;
}

}  // namespace

std::string format_number(double value, int sig_digits) {
  if (sig_digits < 1) {
    throw Error(ErrorKind::InvalidArgument, "sig_digits must be >= 1");
  }
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::scientific,
                                 std::min(sig_digits, 17) - 1);
  (void)ec;
  const Decimal d = split_scientific(std::string_view(buf.data(), ptr));
  if (d.exponent >= -5 && d.exponent < 15) return render_fixed(d);
  return render_exponent(d, 1);
}

std::string format_quantity(const AnyQuantity& q, std::string_view unit,
                            int sig_digits) {
  const AnyQuantity converted = convert(q, unit);
  std::string out = format_number(converted.magnitude(), sig_digits);
  const Unit& u = converted.unit();
  if (!u.glued) out += ' ';
  out += u.symbol;
  return out;
}

std::string format_shortest(double value) {
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  const double mag = std::fabs(value);
  if (mag >= 1e-3 && mag < 1e6) {
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::fixed);
    (void)ec;
    return std::string(buf.data(), ptr);
  }
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::scientific);
  (void)ec;
  const Decimal d = split_scientific(std::string_view(buf.data(), ptr));
  const int e3 = d.exponent >= 0 ? (d.exponent / 3) * 3
                                 : -((-d.exponent + 2) / 3) * 3;
  return render_exponent(d, d.exponent - e3 + 1);
}

}  // namespace evsust
