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

#include "evsust/error.hpp"

namespace evsust {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownUnit: return "UnknownUnit";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NegativeWherePhysical: return "NegativeWherePhysical";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::UnknownDataset: return "UnknownDataset";
    case ErrorKind::UnknownSource: return "UnknownSource";
    case ErrorKind::UnknownChemistry: return "UnknownChemistry";
    case ErrorKind::EmptyField: return "EmptyField";
    case ErrorKind::FractionOutOfRange: return "FractionOutOfRange";
    case ErrorKind::ZeroSpeed: return "ZeroSpeed";
    case ErrorKind::ZeroPerEvEnergy: return "ZeroPerEvEnergy";
    case ErrorKind::ZeroCapacity: return "ZeroCapacity";
    case ErrorKind::ZeroGeneration: return "ZeroGeneration";
    case ErrorKind::ZeroFleetEnergy: return "ZeroFleetEnergy";
    case ErrorKind::ZeroBaseline: return "ZeroBaseline";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::UnknownParameter: return "UnknownParameter";
    case ErrorKind::UnknownTarget: return "UnknownTarget";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

namespace {
std::string join_violations(const std::vector<std::string>& violations) {
  std::string out = "validation failed";
  for (const auto& v : violations) {
    out += "\n  - ";
    out += v;
  }
  return out;
}
}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error(ErrorKind::Validation, join_violations(violations)),
      violations_(std::move(violations)) {}

}  // namespace evsust
