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
#include <string>
#include <string_view>
#include <vector>

// Line-oriented `[section]` / `key = value` reader for scenario files.
namespace evsust::document {

struct Entry {
  std::string key;
  std::string value;  // trimmed, comment removed
  std::size_t line = 0;
  std::size_t column = 0;  // 1-based column of the value's first byte
  std::size_t offset = 0;  // byte offset of the value in the document
};

struct Section {
  std::string name;
  std::size_t line = 0;
  std::vector<Entry> entries;

  const Entry* find(std::string_view key) const;
};

// Throws ParseError for malformed lines, entries outside a section,
// duplicate sections or keys, and documents without any section.
std::vector<Section> parse(std::string_view text);

// Decodes "..." with \" and \\ escapes. Throws ParseError.
std::string unquote(const Entry& entry);

bool is_identifier(std::string_view s);

}  // namespace evsust::document
