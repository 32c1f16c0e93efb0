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

#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <algorithm>
#include <ostream>
#include <sstream>

#include "evsust/report.hpp"
#include "evsust/scenario.hpp"

namespace evsust::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "text";
  int sig_digits = 0;  // 0 keeps the per-kind defaults

  report::SigDigits digits() const {
    return sig_digits > 0 ? report::SigDigits::uniform(sig_digits)
                          : report::SigDigits{};
  }
};

int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::Io:
    case ErrorKind::UnknownTarget:
    case ErrorKind::UnknownParameter:
    case ErrorKind::InvalidArgument:
      return kUsage;
    default:
      return kFailure;
  }
}

std::optional<Scenario> load(const std::string& path, std::ostream& err,
                             int& code) {
  if (!std::filesystem::exists(path)) {
    err << "error: " << path << ": file not found\n";
    code = kUsage;
    return std::nullopt;
  }
  try {
    return load_scenario_file(path);
  } catch (const Error& e) {
    code = report_error(e, err);
    return std::nullopt;
  }
}

int cmd_reproduce(const Options& o, std::vector<std::string> targets,
                  std::ostream& out, std::ostream& err) {
  if (targets.empty()) targets = report::target_ids();
  try {
    const auto results = report::reproduce(targets);
    out << report::render_reproduction(results, report::parse_format(o.format),
                                       o.digits());
    for (const auto& r : results) {
      if (!r.all_pass()) {
        err << "reproduction failed for " << r.target << "\n";
        return kFailure;
      }
    }
    return kOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_run(const Options& o, const std::string& path, bool validate_only,
            std::ostream& out, std::ostream& err) {
  report::Format format;
  try {
    format = report::parse_format(o.format);
  } catch (const Error& e) {
    return report_error(e, err);
  }
  int code = kOk;
  auto scenario = load(path, err, code);
  if (!scenario) return code;
  if (validate_only) {
    out << path << ": valid\n";
    return kOk;
  }
  try {
    out << report::render(assess(*scenario), format, o.digits());
    return kOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

struct SweepFlags {
  std::string path;
  std::string from;
  std::string to;
  std::string step;
  std::string values;
  unsigned threads = 0;
};

int cmd_sweep(const Options& o, const std::string& file, const SweepFlags& f,
              std::ostream& out, std::ostream& err) {
  report::Format format;
  try {
    format = report::parse_format(o.format);
  } catch (const Error& e) {
    return report_error(e, err);
  }
  int code = kOk;
  auto scenario = load(file, err, code);
  if (!scenario) return code;

  std::optional<SweepSpec> spec = scenario->sweep;
  const bool progression = !f.from.empty() || !f.to.empty() || !f.step.empty();
  try {
    if (progression || !f.values.empty()) {
      if (progression && !f.values.empty()) {
        err << "error: use either --values or --from/--to/--step\n";
        return kUsage;
      }
      SweepSpec s;
      s.path = !f.path.empty() ? f.path : (spec ? spec->path : "");
      if (progression) {
        if (f.from.empty() || f.to.empty() || f.step.empty()) {
          err << "error: --from, --to and --step go together\n";
          return kUsage;
        }
        s.values = Progression{parse_literal(f.from), parse_literal(f.to),
                               parse_literal(f.step)};
      } else {
        std::vector<AnyQuantity> list;
        std::stringstream ss(f.values);
        for (std::string item; std::getline(ss, item, ',');) {
          list.push_back(parse_literal(item));
        }
        s.values = std::move(list);
      }
      spec = std::move(s);
    } else if (spec && !f.path.empty()) {
      spec->path = f.path;
    }
    if (!spec || spec->path.empty()) {
      err << "error: no sweep: add a [sweep] section or pass --path with "
             "--values or --from/--to/--step\n";
      return kUsage;
    }
    const auto points = sweep(*scenario, *spec, f.threads);
    out << report::render_sweep(points, spec->path, format, o.digits());
    const bool any_ok = std::any_of(points.begin(), points.end(),
                                    [](const SweepPoint& p) { return p.assessment.has_value(); });
    for (const auto& p : points) {
      if (!p.assessment) err << "point " << format_shortest(p.value.magnitude())
                             << ": " << p.error << "\n";
    }
    return any_ok ? kOk : kFailure;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DimensionMismatch) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    return report_error(e, err);
  }
}

int cmd_export(const std::string& id, const std::string& path,
               std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = "# Built-in reference dataset " + id + "\n" +
           render_dataset(builtin_dataset(id));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (path == "-") {
    out << text;
    return kOk;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << text;
  file.flush();
  if (!file) {
    err << "error: cannot write " << path << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fleet electrification energy accounting", "evsust"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--sig-digits", o.sig_digits,
                 "Significant digits for every value (default: 5 energy, "
                 "4 counts, 3 fractions)")
      ->check(CLI::Range(1, 17));

  auto* reproduce = app.add_subcommand("reproduce",
                                       "Compare against the published figures");
  std::vector<std::string> targets;
  bool all = false;
  reproduce->add_option("targets", targets, "Target ids");
  reproduce->add_flag("--all", all, "Every target (the default)");

  auto* run_cmd = app.add_subcommand("run", "Assess a scenario file");
  std::string scenario_path;
  run_cmd->add_option("scenario", scenario_path)->required();

  auto* validate = app.add_subcommand("validate", "Validate a scenario file");
  validate->add_option("scenario", scenario_path)->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one scenario parameter");
  SweepFlags sf;
  sweep_cmd->add_option("scenario", scenario_path)->required();
  sweep_cmd->add_option("--path", sf.path, "Parameter path, e.g. strategy.renewable_share");
  sweep_cmd->add_option("--from", sf.from);
  sweep_cmd->add_option("--to", sf.to);
  sweep_cmd->add_option("--step", sf.step);
  sweep_cmd->add_option("--values", sf.values, "Comma-separated literals");
  sweep_cmd->add_option("--threads", sf.threads, "Worker threads (0 = auto)");

  auto* export_cmd = app.add_subcommand("export-dataset",
                                        "Write a built-in dataset as a scenario file");
  std::string dataset_id;
  std::string export_path;
  export_cmd->add_option("id", dataset_id)->required();
  export_cmd->add_option("path", export_path, "Output file, or - for stdout")
      ->required();

  for (auto* sub : {reproduce, run_cmd, validate, sweep_cmd, export_cmd}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (reproduce->parsed()) return cmd_reproduce(o, targets, out, err);
  if (run_cmd->parsed()) return cmd_run(o, scenario_path, false, out, err);
  if (validate->parsed()) return cmd_run(o, scenario_path, true, out, err);
  if (sweep_cmd->parsed()) return cmd_sweep(o, scenario_path, sf, out, err);
  return cmd_export(dataset_id, export_path, out, err);
}

}  // namespace evsust::cli
