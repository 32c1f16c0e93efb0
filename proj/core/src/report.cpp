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

#include "evsust/report.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <sstream>

#include "text_table.hpp"

namespace evsust::report {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw Error(ErrorKind::InvalidArgument,
              "unknown format '" + std::string(name) + "'");
}

std::string csv_field(std::string_view s) {
  const bool quote = s.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!quote) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

namespace {

int digits_for(Dimension d, const SigDigits& sd) {
  switch (d) {
    case Dimension::Energy: return sd.energy;
    case Dimension::Count: return sd.count;
    case Dimension::Fraction: return sd.fraction;
    default: return sd.other;
  }
}

std::string_view display_unit(Dimension d) {
  switch (d) {
    case Dimension::Energy: return "TWh";
    case Dimension::Power: return "kW";
    case Dimension::Speed: return "mph";
    case Dimension::Distance: return "mi";
    case Dimension::Volume: return "e12 gal";
    case Dimension::Mass: return "Mt";
    case Dimension::Count: return "e9";
    case Dimension::Fraction: return "frac";
    case Dimension::CarbonIntensity: return "Mt/TWh";
    case Dimension::WaterIntensity: return "gal/MWh";
    case Dimension::HeatContent: return "Btu/gal";
    case Dimension::SpecificEnergy: return "Wh/kg";
    case Dimension::BtuEquivalence: return "Wh/Btu";
    case Dimension::Scalar: return "scalar";
  }
  return "";
}

// One output value: label, quantity and the unit it is shown in.
struct Row {
  std::string section;
  std::string field;
  std::string label;
  std::optional<AnyQuantity> quantity;
  std::string unit;
  std::string text;  // for non-numeric rows

  std::string shown(const SigDigits& sd) const {
    if (!quantity) return text;
    if (unit == "frac" || unit == "scalar" || unit.empty()) {
      return format_number(convert(*quantity, unit).magnitude(),
                           digits_for(quantity->dimension(), sd));
    }
    return format_quantity(*quantity, unit,
                           digits_for(quantity->dimension(), sd));
  }
  std::string number(const SigDigits& sd) const {
    if (!quantity) return text;
    return format_number(convert(*quantity, unit).magnitude(),
                         digits_for(quantity->dimension(), sd));
  }
  std::string unit_label() const {
    if (!quantity || unit == "frac" || unit == "scalar") return "";
    return unit;
  }
};

std::string method_name(MethodSelection m) {
  switch (m) {
    case MethodSelection::A: return "A";
    case MethodSelection::B: return "B";
    case MethodSelection::Both: return "both";
  }
  return "";
}

std::string demand_name(engine::Method m) {
  return m == engine::Method::A ? "A" : "B";
}

std::vector<Row> rows_of(const Assessment& a) {
  std::vector<Row> rows;
  const Scenario& s = a.scenario;
  auto q = [&](std::string section, std::string field, std::string label,
               AnyQuantity value, std::string unit) {
    rows.push_back({std::move(section), std::move(field), std::move(label),
                    value, std::move(unit), ""});
  };
  auto t = [&](std::string section, std::string field, std::string label,
               std::string text) {
    rows.push_back({std::move(section), std::move(field), std::move(label),
                    std::nullopt, "", std::move(text)});
  };

  t("input", "dataset", "dataset", s.dataset.id);
  if (const auto* b = std::get_if<engine::SharesBasis>(&s.fleet)) {
    t("input", "fleet_basis", "fleet basis", "shares");
    q("input", "total_energy", "total energy", b->total_energy, "TWh");
    q("input", "transport_share", "transport share", b->transport_share, "%");
    q("input", "fuel_share", "fuel share", b->fuel_share, "%");
  } else {
    const auto& g = std::get<engine::GallonsBasis>(s.fleet);
    t("input", "fleet_basis", "fleet basis", "gallons");
    q("input", "gallons", "gasoline volume", g.gallons, "e9 gal");
    q("input", "heat_content", "heat content", g.heat_content, "Btu/gal");
    t("input", "btu_constant", "Btu constant",
      g.btu == BtuConstant::Exact ? "exact (0.293071 Wh/Btu)"
                                  : "rounded (0.2929 Wh/Btu)");
  }
  if (std::holds_alternative<Energy>(s.ev)) {
    t("input", "ev_reference", "per-EV reference", "explicit");
  } else if (const auto* tr = std::get_if<EvTriple>(&s.ev)) {
    t("input", "ev_reference", "per-EV reference", "power/range/speed");
    q("input", "ev_power", "EV power", tr->power, "kW");
    q("input", "ev_range", "EV range", tr->range, "mi");
    q("input", "ev_speed", "EV speed", tr->speed, "mph");
  } else {
    t("input", "ev_reference", "per-EV reference", "catalog-median");
  }
  t("input", "chemistry", "chemistry", s.chemistry);
  q("input", "batteries_per_ev", "batteries per EV", s.batteries_per_ev, "");
  t("input", "method", "method", method_name(s.method));
  t("input", "convention", "convention",
    s.convention == BatteryConvention::Consistent ? "consistent"
                                                  : "paper-mantissa");
  q("input", "renewable_share", "renewable share", s.renewable_share, "%");
  q("input", "baseline_generation", "baseline generation",
    s.baseline_generation, "TWh");

  q("output", "fleet_energy", "fleet energy", a.fleet_energy, "TWh");
  q("output", "per_ev_energy", "per-EV energy", a.per_ev_energy, "kWh");
  q("output", "ev_count", "EV count", a.ev_count, "e9");
  for (std::size_t i = 0; i < a.demands.size(); ++i) {
    const auto& d = a.demands[i];
    const auto& p = a.production[i];
    const std::string m = demand_name(d.method);
    q("output", "method_" + m + "_battery_count",
      "method " + m + " battery count", d.battery_count, "e9");
    q("output", "method_" + m + "_production_energy",
      "method " + m + " production energy", p.consistent, "TWh");
    q("output", "method_" + m + "_production_energy_table",
      "method " + m + " production energy (table convention)",
      p.paper_mantissa, "TWh");
  }
  q("output", "battery_energy", "battery energy (totals)", a.battery_energy,
    "TWh");
  q("output", "total_additional_energy", "total additional energy",
    a.total_additional_energy, "TWh");
  q("output", "carbon_intensity", "carbon intensity", a.carbon_intensity,
    "Mt/TWh");
  q("output", "additional_co2", "additional CO2", a.additional_co2, "Mt");
  for (const auto& w : a.water) {
    q("output", "water_" + w.fuel, "water " + w.fuel, w.volume, "e12 gal");
  }
  if (a.strategy) {
    q("output", "renewable_energy", "renewable generation",
      a.strategy->renewable_energy, "TWh");
    q("output", "conversion_fraction", "conversion fraction",
      Fraction(a.strategy->fraction > 1.0 ? 1.0 : a.strategy->fraction),
      "frac");
  } else {
    t("output", "conversion_fraction", "conversion fraction", "undefined");
  }
  q("output", "total_required", "total required", a.deficit.total_required,
    "TWh");
  q("output", "ratio_to_baseline", "ratio to baseline",
    AnyQuantity(a.deficit.ratio_to_baseline, "scalar"), "scalar");
  q("output", "deficit", "capacity deficit", a.deficit.deficit, "TWh");
  return rows;
}

json quantity_json(const AnyQuantity& q, const std::string& shown) {
  return json{{"value", q.canonical_value()},
              {"unit", std::string(units::canonical(q.dimension()).symbol)},
              {"display", shown}};
}

}  // namespace

std::string render(const Assessment& a, Format format, const SigDigits& sd) {
  const std::vector<Row> rows = rows_of(a);
  std::ostringstream out;
  switch (format) {
    case Format::Text: {
      out << "scenario " << a.scenario.name << "\n\n";
      for (const char* section : {"input", "output"}) {
        TextTable table;
        table.add({section, "value"});
        for (const auto& r : rows) {
          if (r.section == section) table.add({r.label, r.shown(sd)});
        }
        table.write(out);
        out << "\n";
      }
      if (!a.notes.empty()) {
        out << "notes\n";
        for (const auto& n : a.notes) {
          out << "  [" << n.field << "] " << n.text << "\n";
        }
      }
      break;
    }
    case Format::Csv: {
      out << "section,field,value,unit\n";
      for (const auto& r : rows) {
        out << r.section << "," << r.field << "," << csv_field(r.number(sd))
            << "," << csv_field(r.unit_label()) << "\n";
      }
      for (const auto& n : a.notes) {
        out << "note," << csv_field(n.field) << "," << csv_field(n.text)
            << ",\n";
      }
      break;
    }
    case Format::Json: {
      json doc;
      doc["scenario"] = a.scenario.name;
      json inputs = json::object();
      json outputs = json::object();
      for (const auto& r : rows) {
        json& target = r.section == "input" ? inputs : outputs;
        target[r.field] = r.quantity ? quantity_json(*r.quantity, r.shown(sd))
                                     : json(r.text);
      }
      doc["inputs"] = inputs;
      doc["outputs"] = outputs;
      json notes = json::array();
      for (const auto& n : a.notes) {
        notes.push_back({{"field", n.field}, {"text", n.text}});
      }
      doc["notes"] = notes;
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

std::string render_sweep(const std::vector<SweepPoint>& points,
                         std::string_view path, Format format,
                         const SigDigits& sd) {
  struct SweepRow {
    std::vector<std::string> cells;
    json object;
  };
  static const std::vector<std::string> header{
      "value",
      "unit",
      "status",
      "fleet_energy_TWh",
      "ev_count_e9",
      "battery_energy_TWh",
      "total_additional_TWh",
      "additional_co2_Mt",
      "conversion_fraction",
      "ratio_to_baseline",
      "error"};

  std::vector<SweepRow> rows;
  for (const auto& p : points) {
    SweepRow row;
    const std::string unit(display_unit(p.value.dimension()));
    const double shown_value = convert(p.value, unit).magnitude();
    row.cells = {format_number(shown_value, digits_for(p.value.dimension(), sd)),
                 unit == "frac" || unit == "scalar" ? "" : unit};
    row.object["value"] = shown_value;
    row.object["unit"] = row.cells[1];
    if (p.assessment) {
      const Assessment& a = *p.assessment;
      auto num = [&](double v, int digits) { return format_number(v, digits); };
      const double fraction = a.strategy ? a.strategy->fraction : 0.0;
      row.cells.insert(
          row.cells.end(),
          {"ok", num(a.fleet_energy.as("TWh"), sd.energy),
           num(a.ev_count.as("e9"), sd.count),
           num(a.battery_energy.as("TWh"), sd.energy),
           num(a.total_additional_energy.as("TWh"), sd.energy),
           num(a.additional_co2.as("Mt"), sd.other),
           a.strategy ? num(fraction, sd.fraction) : "",
           num(a.deficit.ratio_to_baseline, sd.other), ""});
      row.object["status"] = "ok";
      row.object["fleet_energy_TWh"] = a.fleet_energy.as("TWh");
      row.object["ev_count_e9"] = a.ev_count.as("e9");
      row.object["battery_energy_TWh"] = a.battery_energy.as("TWh");
      row.object["total_additional_TWh"] = a.total_additional_energy.as("TWh");
      row.object["additional_co2_Mt"] = a.additional_co2.as("Mt");
      row.object["conversion_fraction"] =
          a.strategy ? json(fraction) : json(nullptr);
      row.object["ratio_to_baseline"] = a.deficit.ratio_to_baseline;
    } else {
      row.cells.insert(row.cells.end(), {"error", "", "", "", "", "", "", "",
                                         p.error});
      row.object["status"] = "error";
      row.object["error"] = p.error;
    }
    rows.push_back(std::move(row));
  }

  std::ostringstream out;
  switch (format) {
    case Format::Text: {
      out << "sweep " << path << "\n\n";
      TextTable table;
      table.add(header);
      for (auto r : rows) {
        std::string& err = r.cells.back();
        std::replace(err.begin(), err.end(), '\n', ' ');
        table.add(r.cells);
      }
      table.write(out);
      break;
    }
    case Format::Csv: {
      for (std::size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << header[i];
      }
      out << "\n";
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.cells.size(); ++i) {
          out << (i ? "," : "") << csv_field(r.cells[i]);
        }
        out << "\n";
      }
      break;
    }
    case Format::Json: {
      json doc;
      doc["path"] = std::string(path);
      json arr = json::array();
      for (const auto& r : rows) arr.push_back(r.object);
      doc["points"] = arr;
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace evsust::report
