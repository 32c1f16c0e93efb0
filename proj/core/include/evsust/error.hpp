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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace evsust {

enum class ErrorKind {
  UnknownUnit,
  DimensionMismatch,
  Parse,
  NegativeWherePhysical,
  NotFinite,
  UnknownDataset,
  UnknownSource,
  UnknownChemistry,
  EmptyField,
  FractionOutOfRange,
  ZeroSpeed,
  ZeroPerEvEnergy,
  ZeroCapacity,
  ZeroGeneration,
  ZeroFleetEnergy,
  ZeroBaseline,
  Validation,
  UnknownParameter,
  UnknownTarget,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax failure. Quantity literals report a byte offset; scenario files
// additionally report 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset,
             std::size_t line = 0, std::size_t column = 0)
      : Error(ErrorKind::Parse, message),
        offset_(offset),
        line_(line),
        column_(column) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept {
    return violations_;
  }

 private:
  std::vector<std::string> violations_;
};

}  // namespace evsust
