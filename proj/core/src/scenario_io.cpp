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

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "document.hpp"
#include "evsust/scenario.hpp"

namespace evsust {

namespace {

using document::Entry;
using document::Section;

constexpr std::string_view kChemistryPrefix = "chemistry.";

std::string where(const Entry& e) {
  return "line " + std::to_string(e.line) + " (" + e.key + ")";
}

[[noreturn]] void fail_at(const Entry& e, const std::string& message) {
  throw ParseError("line " + std::to_string(e.line) + ", column " +
                       std::to_string(e.column) + ": " + message,
                   e.offset, e.line, e.column);
}

bool has_unit(std::string_view text) {
  for (char c : text) {
    if ((c >= 'a' && c <= 'z' && c != 'e') || (c >= 'A' && c <= 'Z' && c != 'E') ||
        c == '%' || c == '/') {
      return true;
    }
  }
  return false;
}

class Loader {
 public:
  explicit Loader(std::vector<Section> sections)
      : sections_(std::move(sections)) {}

  Scenario load();

 private:
  const Section* section(std::string_view name) const {
    for (const auto& s : sections_) {
      if (s.name == name) return &s;
    }
    return nullptr;
  }

  void check_keys(const Section& s,
                  std::initializer_list<std::string_view> allowed) {
    for (const auto& e : s.entries) {
      bool known = false;
      for (auto k : allowed) known = known || e.key == k;
      if (!known) fail_at(e, "unknown key '" + e.key + "' in [" + s.name + "]");
    }
  }

  // A quantity literal, bare or inside quotes ("30 %").
  AnyQuantity literal(const Entry& e) {
    const bool quoted = !e.value.empty() && e.value.front() == '"';
    const std::size_t shift = quoted ? 1 : 0;
    try {
      return parse_literal(quoted ? document::unquote(e) : e.value);
    } catch (const ParseError& err) {
      if (err.line() != 0) throw;
      const std::size_t at = err.offset() + shift;
      throw ParseError("line " + std::to_string(e.line) + ", column " +
                           std::to_string(e.column + at) + ": " + err.what(),
                       e.offset + at, e.line, e.column + at);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::UnknownUnit) fail_at(e, err.what());
      if (err.kind() == ErrorKind::NegativeWherePhysical) {
        violations_.push_back(where(e) + ": " + err.what());
        return AnyQuantity(0.0, "scalar");
      }
      throw;
    }
  }

  template <Dimension D>
  std::optional<Quantity<D>> read(const Section* s, std::string_view key) {
    if (s == nullptr) return std::nullopt;
    const Entry* e = s->find(key);
    if (e == nullptr) return std::nullopt;
    const AnyQuantity q = literal(*e);
    try {
      return q.template as<D>();
    } catch (const Error& err) {
      violations_.push_back(where(*e) + ": " + err.what());
      return std::nullopt;
    }
  }

  std::optional<std::string> identifier(const Section* s,
                                        std::string_view key) {
    if (s == nullptr) return std::nullopt;
    const Entry* e = s->find(key);
    if (e == nullptr) return std::nullopt;
    if (!document::is_identifier(e->value)) {
      fail_at(*e, "expected an identifier, got '" + e->value + "'");
    }
    return e->value;
  }

  std::optional<std::string> text(const Section* s, std::string_view key) {
    if (s == nullptr) return std::nullopt;
    const Entry* e = s->find(key);
    if (e == nullptr) return std::nullopt;
    if (!e->value.empty() && e->value.front() == '"') {
      return document::unquote(*e);
    }
    return identifier(s, key);
  }

  std::optional<int> integer(const Section* s, std::string_view key) {
    if (s == nullptr) return std::nullopt;
    const Entry* e = s->find(key);
    if (e == nullptr) return std::nullopt;
    double v = 0;
    try {
      v = parse_number(e->value);
    } catch (const ParseError& err) {
      fail_at(*e, err.what());
    }
    if (v != std::floor(v) || std::fabs(v) > 1e9) {
      fail_at(*e, "expected an integer");
    }
    return static_cast<int>(v);
  }

  ReferenceDataset inline_dataset(const Section& ds);
  std::vector<std::pair<std::string, WaterIntensity>> water_pairs(
      const Section& s);
  BatteryChemistry chemistry(const Section& s);
  void fleet(Scenario& sc);
  void ev(Scenario& sc);
  void battery(Scenario& sc);
  void sweep(Scenario& sc);

  template <Dimension D>
  Quantity<D> required(const Section* s, std::string_view key,
                       std::string_view context) {
    if (auto q = read<D>(s, key)) return *q;
    if (s == nullptr || s->find(key) == nullptr) {
      violations_.push_back(std::string(context) + ": missing '" +
                            std::string(key) + "'");
    }
    return Quantity<D>();
  }

  std::vector<Section> sections_;
  std::vector<std::string> violations_;
};

std::vector<std::pair<std::string, WaterIntensity>> Loader::water_pairs(
    const Section& s) {
  std::vector<std::pair<std::string, WaterIntensity>> out;
  for (const auto& e : s.entries) {
    if (auto q = read<Dimension::WaterIntensity>(&s, e.key)) {
      out.emplace_back(e.key, *q);
    }
  }
  return out;
}

ReferenceDataset Loader::inline_dataset(const Section& ds) {
  check_keys(ds, {"id", "year", "total_generation", "total_consumption",
                  "transport_share", "fuel_share", "household_gasoline",
                  "gasoline_heat_content", "co2_total", "renewable_target"});
  ReferenceDataset d;
  if (auto id = text(&ds, "id")) {
    d.id = *id;
  } else {
    violations_.push_back("[dataset]: missing 'id'");
  }
  if (auto year = integer(&ds, "year")) {
    d.year = *year;
  } else {
    violations_.push_back("[dataset]: missing 'year'");
  }
  d.mix.year = d.year;
  d.mix.total_generation =
      required<Dimension::Energy>(&ds, "total_generation", "[dataset]");
  d.total_consumption = read<Dimension::Energy>(&ds, "total_consumption");
  d.transport_share = read<Dimension::Fraction>(&ds, "transport_share");
  d.fuel_share = read<Dimension::Fraction>(&ds, "fuel_share");
  d.household_gasoline = read<Dimension::Volume>(&ds, "household_gasoline");
  d.gasoline_heat_content =
      read<Dimension::HeatContent>(&ds, "gasoline_heat_content")
          .value_or(HeatContent(units::kGasolineHeatContentBtuPerGal));
  d.co2_total = required<Dimension::Mass>(&ds, "co2_total", "[dataset]");
  d.renewable_target =
      read<Dimension::Fraction>(&ds, "renewable_target").value_or(Fraction(0.30));

  if (const Section* mix = section("mix")) {
    for (const auto& e : mix->entries) {
      if (auto share = read<Dimension::Fraction>(mix, e.key)) {
        d.mix.entries.push_back({e.key, *share});
      }
    }
  } else {
    violations_.push_back("inline dataset requires a [mix] section");
  }
  if (const Section* water = section("dataset.water")) {
    d.water_intensity = water_pairs(*water);
  }
  return d;
}

BatteryChemistry Loader::chemistry(const Section& s) {
  check_keys(s, {"energy_density", "pack_mass", "pack_capacity",
                 "manufacture_energy", "electrodes", "electrolyte",
                 "emissions", "comments"});
  BatteryChemistry c;
  c.name = s.name.substr(kChemistryPrefix.size());
  const std::string ctx = "[" + s.name + "]";
  c.energy_density =
      required<Dimension::SpecificEnergy>(&s, "energy_density", ctx);
  c.pack_mass = required<Dimension::Mass>(&s, "pack_mass", ctx);
  c.pack_capacity = required<Dimension::Energy>(&s, "pack_capacity", ctx);
  c.manufacture_energy =
      required<Dimension::Energy>(&s, "manufacture_energy", ctx);
  c.electrodes = text(&s, "electrodes").value_or("");
  c.electrolyte = text(&s, "electrolyte").value_or("");
  c.emissions = text(&s, "emissions").value_or("");
  c.comments = text(&s, "comments").value_or("");
  return c;
}

void Loader::fleet(Scenario& sc) {
  const Section* s = section("fleet");
  if (s != nullptr) {
    check_keys(*s, {"basis", "total_energy", "transport_share", "fuel_share",
                    "gallons", "heat_content", "btu_constant"});
  }
  const ReferenceDataset& d = sc.dataset;
  std::string basis = d.total_consumption ? "shares" : "gallons";
  if (auto b = identifier(s, "basis")) {
    if (*b != "shares" && *b != "gallons") {
      fail_at(*s->find("basis"), "basis must be 'shares' or 'gallons'");
    }
    basis = *b;
  }
  auto reject = [&](std::initializer_list<std::string_view> keys) {
    if (s == nullptr) return;
    for (auto k : keys) {
      if (const Entry* e = s->find(k)) {
        violations_.push_back(where(*e) + ": not used by basis '" + basis +
                              "'");
      }
    }
  };
  auto defaulted = [&](auto value, auto fallback, const char* key) {
    if (value) return *value;
    if (fallback) return *fallback;
    violations_.push_back("[fleet]: '" + std::string(key) +
                          "' is required (dataset has no default)");
    return std::decay_t<decltype(*fallback)>{};
  };
  if (basis == "shares") {
    reject({"gallons", "heat_content", "btu_constant"});
    engine::SharesBasis b;
    b.total_energy = defaulted(read<Dimension::Energy>(s, "total_energy"),
                               d.total_consumption, "total_energy");
    b.transport_share =
        defaulted(read<Dimension::Fraction>(s, "transport_share"),
                  d.transport_share, "transport_share");
    b.fuel_share = defaulted(read<Dimension::Fraction>(s, "fuel_share"),
                             d.fuel_share, "fuel_share");
    sc.fleet = b;
  } else {
    reject({"total_energy", "transport_share", "fuel_share"});
    engine::GallonsBasis b;
    b.gallons = defaulted(read<Dimension::Volume>(s, "gallons"),
                          d.household_gasoline, "gallons");
    b.heat_content = read<Dimension::HeatContent>(s, "heat_content")
                         .value_or(d.gasoline_heat_content);
    if (auto c = identifier(s, "btu_constant")) {
      if (*c == "exact") {
        b.btu = BtuConstant::Exact;
      } else if (*c == "rounded") {
        b.btu = BtuConstant::Rounded;
      } else {
        fail_at(*s->find("btu_constant"),
                "btu_constant must be 'exact' or 'rounded'");
      }
    }
    sc.fleet = b;
  }
}

void Loader::ev(Scenario& sc) {
  const Section* s = section("ev");
  if (s == nullptr) {
    sc.ev = CatalogMedian{};
    return;
  }
  check_keys(*s, {"per_ev_energy", "power", "range", "speed", "source"});
  const bool explicit_energy = s->find("per_ev_energy") != nullptr;
  const int triple = (s->find("power") != nullptr) +
                     (s->find("range") != nullptr) +
                     (s->find("speed") != nullptr);
  if (auto src = identifier(s, "source")) {
    if (*src != "catalog-median" && *src != "explicit") {
      fail_at(*s->find("source"),
              "source must be 'catalog-median' or 'explicit'");
    }
    if (*src == "catalog-median") {
      if (explicit_energy || triple > 0) {
        violations_.push_back(
            "[ev]: source = catalog-median excludes per_ev_energy and "
            "power/range/speed");
      }
      sc.ev = CatalogMedian{};
      return;
    }
  }
  if (explicit_energy && triple > 0) {
    violations_.push_back(
        "[ev]: give either per_ev_energy or power/range/speed, not both");
  }
  if (explicit_energy) {
    sc.ev = read<Dimension::Energy>(s, "per_ev_energy").value_or(Energy());
  } else if (triple == 3) {
    sc.ev = EvTriple{read<Dimension::Power>(s, "power").value_or(Power()),
                     read<Dimension::Distance>(s, "range").value_or(Distance()),
                     read<Dimension::Speed>(s, "speed").value_or(Speed())};
  } else if (triple > 0) {
    violations_.push_back("[ev]: power, range and speed must be given together");
  } else {
    sc.ev = CatalogMedian{};
  }
}

void Loader::battery(Scenario& sc) {
  const Section* s = section("battery");
  if (s == nullptr) return;
  check_keys(*s, {"chemistry", "batteries_per_ev", "method", "convention"});
  if (auto c = identifier(s, "chemistry")) sc.chemistry = *c;
  if (auto n = read<Dimension::Count>(s, "batteries_per_ev")) {
    sc.batteries_per_ev = *n;
  }
  if (auto m = identifier(s, "method")) {
    if (*m == "A") {
      sc.method = MethodSelection::A;
    } else if (*m == "B") {
      sc.method = MethodSelection::B;
    } else if (*m == "both") {
      sc.method = MethodSelection::Both;
    } else {
      fail_at(*s->find("method"), "method must be A, B or both");
    }
  }
  if (auto c = identifier(s, "convention")) {
    if (*c == "consistent") {
      sc.convention = BatteryConvention::Consistent;
    } else if (*c == "paper-mantissa") {
      sc.convention = BatteryConvention::PaperMantissa;
    } else {
      fail_at(*s->find("convention"),
              "convention must be 'consistent' or 'paper-mantissa'");
    }
  }
}

std::vector<AnyQuantity> split_list(const Entry& e) {
  std::vector<AnyQuantity> out;
  std::size_t start = 0;
  while (start <= e.value.size()) {
    std::size_t comma = e.value.find(',', start);
    if (comma == std::string::npos) comma = e.value.size();
    const std::string item = e.value.substr(start, comma - start);
    try {
      out.push_back(parse_literal(item));
    } catch (const Error& err) {
      throw ParseError("line " + std::to_string(e.line) + ", column " +
                           std::to_string(e.column + start) + ": " +
                           err.what(),
                       e.offset + start, e.line, e.column + start);
    }
    start = comma + 1;
  }
  return out;
}

void Loader::sweep(Scenario& sc) {
  const Section* s = section("sweep");
  if (s == nullptr) return;
  check_keys(*s, {"path", "values", "from", "to", "step"});
  SweepSpec spec;
  if (auto p = identifier(s, "path")) {
    spec.path = *p;
  } else {
    violations_.push_back("[sweep]: missing 'path'");
  }
  const bool progression = s->find("from") || s->find("to") || s->find("step");
  if (const Entry* v = s->find("values")) {
    if (progression) {
      violations_.push_back("[sweep]: give either values or from/to/step");
    }
    spec.values = split_list(*v);
  } else if (progression) {
    auto get = [&](const char* key) {
      const Entry* e = s->find(key);
      if (e == nullptr) {
        violations_.push_back("[sweep]: missing '" + std::string(key) + "'");
        return AnyQuantity(0.0, "scalar");
      }
      return literal(*e);
    };
    spec.values = Progression{get("from"), get("to"), get("step")};
  } else {
    violations_.push_back("[sweep]: missing values or from/to/step");
  }
  sc.sweep = std::move(spec);
}

Scenario Loader::load() {
  for (const auto& s : sections_) {
    static constexpr std::string_view known[] = {
        "meta", "dataset", "mix", "dataset.water", "fleet", "ev",
        "battery", "strategy", "water", "sweep"};
    bool ok = s.name.rfind(kChemistryPrefix, 0) == 0 &&
              s.name.size() > kChemistryPrefix.size();
    for (auto k : known) ok = ok || s.name == k;
    if (!ok) {
      throw ParseError("line " + std::to_string(s.line) +
                           ": unknown section [" + s.name + "]",
                       0, s.line, 1);
    }
  }

  Scenario sc;
  const Section* meta = section("meta");
  if (meta != nullptr) check_keys(*meta, {"name", "dataset"});
  const Section* ds = section("dataset");
  const auto dataset_id = identifier(meta, "dataset");
  if (dataset_id && ds != nullptr) {
    violations_.push_back(
        "[meta] dataset and an inline [dataset] section are exclusive");
  }
  if (ds != nullptr) {
    sc.dataset = inline_dataset(*ds);
  } else if (dataset_id) {
    sc.dataset_ref = *dataset_id;
    sc.dataset = builtin_dataset(*dataset_id);
  } else {
    throw ValidationError({"no dataset: set [meta] dataset or add [dataset]"});
  }
  if (ds == nullptr && (section("mix") || section("dataset.water"))) {
    violations_.push_back("[mix] and [dataset.water] require [dataset]");
  }
  sc.name = text(meta, "name").value_or(sc.dataset.id);

  for (const auto& s : sections_) {
    if (s.name.rfind(kChemistryPrefix, 0) == 0) {
      sc.custom_chemistries.push_back(chemistry(s));
    }
  }

  fleet(sc);
  ev(sc);
  battery(sc);

  const Section* strategy = section("strategy");
  if (strategy != nullptr) {
    check_keys(*strategy, {"renewable_share", "baseline_generation"});
  }
  sc.renewable_share = read<Dimension::Fraction>(strategy, "renewable_share")
                           .value_or(sc.dataset.renewable_target);
  sc.baseline_generation =
      read<Dimension::Energy>(strategy, "baseline_generation")
          .value_or(sc.dataset.mix.total_generation);

  if (const Section* water = section("water")) {
    sc.water = water_pairs(*water);
  } else {
    sc.water = sc.dataset.water_intensity;
  }
  sweep(sc);

  if (violations_.empty()) {
    // Unknown chemistry is its own error kind rather than a violation.
    (void)sc.resolved_chemistry();
  }
  auto more = validate_scenario(sc);
  violations_.insert(violations_.end(), more.begin(), more.end());
  if (!violations_.empty()) throw ValidationError(violations_);
  return sc;
}

// Literal `q` in `unit` that parses back to exactly q's canonical value;
// searches a few neighbouring doubles when the direct rendering drifts.
std::string exact_literal(double canonical, std::string_view unit_symbol) {
  const Unit& unit = units::find(unit_symbol);
  const double x0 = unit.from_canonical(canonical);
  double up = x0;
  double down = x0;
  for (int i = 0; i < 8; ++i) {
    for (double x : {up, down}) {
      const std::string s = format_shortest(x) + " " + std::string(unit_symbol);
      if (parse_quantity(s).canonical_value() == canonical) return s;
    }
    up = std::nextafter(up, HUGE_VAL);
    down = std::nextafter(down, -HUGE_VAL);
  }
  const Unit& c = units::canonical(unit.dimension);
  return format_shortest(canonical) + " " + std::string(c.symbol);
}

}  // namespace

Scenario load_scenario(std::string_view text) {
  return Loader(document::parse(text)).load();
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Io, path.string() + ": file not found");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scenario(buf.str());
}

AnyQuantity parse_literal(std::string_view text) {
  if (!has_unit(text)) return AnyQuantity(parse_number(text), "scalar");
  return parse_quantity(text);
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string bare(double v) { return format_shortest(v); }

std::string literal_of(const AnyQuantity& q) {
  if (q.dimension() == Dimension::Scalar) return bare(q.magnitude());
  const Unit& c = q.unit();
  if (c.literal) return format_shortest(q.magnitude()) + " " + std::string(c.symbol);
  for (const Unit& u : units::all()) {
    if (u.dimension == q.dimension() && u.literal) {
      return exact_literal(q.canonical_value(), u.symbol);
    }
  }
  return bare(q.canonical_value());
}

void water_section(std::ostream& out, const char* name,
                   const std::vector<std::pair<std::string, WaterIntensity>>& w) {
  out << "\n[" << name << "]\n";
  for (const auto& [fuel, intensity] : w) {
    out << fuel << " = " << exact_literal(intensity.value(), "gal/MWh") << "\n";
  }
}

}  // namespace

std::string render_dataset(const ReferenceDataset& d) {
  std::ostringstream out;
  out << "[dataset]\n";
  out << "id = " << quote(d.id) << "\n";
  out << "year = " << d.year << "\n";
  out << "total_generation = "
      << exact_literal(d.mix.total_generation.value(), "TWh") << "\n";
  if (d.total_consumption) {
    out << "total_consumption = "
        << exact_literal(d.total_consumption->value(), "TWh") << "\n";
  }
  if (d.transport_share) {
    out << "transport_share = " << bare(d.transport_share->value()) << "\n";
  }
  if (d.fuel_share) out << "fuel_share = " << bare(d.fuel_share->value()) << "\n";
  if (d.household_gasoline) {
    out << "household_gasoline = "
        << exact_literal(d.household_gasoline->value(), "gal") << "\n";
  }
  out << "gasoline_heat_content = "
      << exact_literal(d.gasoline_heat_content.value(), "Btu/gal") << "\n";
  out << "co2_total = " << exact_literal(d.co2_total.value(), "Mt") << "\n";
  out << "renewable_target = " << bare(d.renewable_target.value()) << "\n";
  out << "\n[mix]\n";
  for (const auto& e : d.mix.entries) {
    const auto provenance = mix_share_provenance(d.id, e.source);
    if (!provenance.empty()) out << "# " << e.source << ": " << provenance << "\n";
    out << e.source << " = " << bare(e.share.value()) << "\n";
  }
  if (!d.water_intensity.empty()) {
    water_section(out, "dataset.water", d.water_intensity);
  }
  return out.str();
}

std::string render_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "[meta]\n";
  out << "name = " << quote(s.name) << "\n";
  if (!s.dataset_ref.empty()) out << "dataset = " << s.dataset_ref << "\n";
  if (s.dataset_ref.empty()) out << "\n" << render_dataset(s.dataset);

  out << "\n[fleet]\n";
  if (const auto* b = std::get_if<engine::SharesBasis>(&s.fleet)) {
    out << "basis = shares\n";
    out << "total_energy = " << exact_literal(b->total_energy.value(), "TWh")
        << "\n";
    out << "transport_share = " << bare(b->transport_share.value()) << "\n";
    out << "fuel_share = " << bare(b->fuel_share.value()) << "\n";
  } else {
    const auto& g = std::get<engine::GallonsBasis>(s.fleet);
    out << "basis = gallons\n";
    out << "gallons = " << exact_literal(g.gallons.value(), "gal") << "\n";
    out << "heat_content = " << exact_literal(g.heat_content.value(), "Btu/gal")
        << "\n";
    out << "btu_constant = "
        << (g.btu == BtuConstant::Exact ? "exact" : "rounded") << "\n";
  }

  out << "\n[ev]\n";
  if (const auto* e = std::get_if<Energy>(&s.ev)) {
    out << "per_ev_energy = " << exact_literal(e->value(), "kWh") << "\n";
  } else if (const auto* t = std::get_if<EvTriple>(&s.ev)) {
    out << "power = " << exact_literal(t->power.value(), "kW") << "\n";
    out << "range = " << exact_literal(t->range.value(), "mi") << "\n";
    out << "speed = " << exact_literal(t->speed.value(), "mph") << "\n";
  } else {
    out << "source = catalog-median\n";
  }

  for (const auto& c : s.custom_chemistries) {
    out << "\n[chemistry." << c.name << "]\n";
    out << "energy_density = " << exact_literal(c.energy_density.value(), "Wh/kg")
        << "\n";
    out << "pack_mass = " << exact_literal(c.pack_mass.value(), "kg") << "\n";
    out << "pack_capacity = " << exact_literal(c.pack_capacity.value(), "kWh")
        << "\n";
    out << "manufacture_energy = "
        << exact_literal(c.manufacture_energy.value(), "kWh") << "\n";
    if (!c.electrodes.empty()) out << "electrodes = " << quote(c.electrodes) << "\n";
    if (!c.electrolyte.empty()) out << "electrolyte = " << quote(c.electrolyte) << "\n";
    if (!c.emissions.empty()) out << "emissions = " << quote(c.emissions) << "\n";
    if (!c.comments.empty()) out << "comments = " << quote(c.comments) << "\n";
  }

  out << "\n[battery]\n";
  out << "chemistry = " << s.chemistry << "\n";
  out << "batteries_per_ev = " << bare(s.batteries_per_ev.value()) << "\n";
  out << "method = "
      << (s.method == MethodSelection::A   ? "A"
          : s.method == MethodSelection::B ? "B"
                                           : "both")
      << "\n";
  out << "convention = "
      << (s.convention == BatteryConvention::Consistent ? "consistent"
                                                        : "paper-mantissa")
      << "\n";

  out << "\n[strategy]\n";
  out << "renewable_share = " << bare(s.renewable_share.value()) << "\n";
  out << "baseline_generation = "
      << exact_literal(s.baseline_generation.value(), "TWh") << "\n";

  water_section(out, "water", s.water);

  if (s.sweep) {
    out << "\n[sweep]\n";
    out << "path = " << s.sweep->path << "\n";
    if (const auto* list = std::get_if<std::vector<AnyQuantity>>(&s.sweep->values)) {
      out << "values = ";
      for (std::size_t i = 0; i < list->size(); ++i) {
        if (i > 0) out << ", ";
        out << literal_of((*list)[i]);
      }
      out << "\n";
    } else {
      const auto& p = std::get<Progression>(s.sweep->values);
      out << "from = " << literal_of(p.from) << "\n";
      out << "to = " << literal_of(p.to) << "\n";
      out << "step = " << literal_of(p.step) << "\n";
    }
  }
  return out.str();
}

}  // namespace evsust
