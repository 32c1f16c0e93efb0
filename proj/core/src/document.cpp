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

#include "document.hpp"

#include <set>

#include "evsust/error.hpp"

namespace evsust::document {

namespace {

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
}

bool is_blank(char c) { return c == ' ' || c == '\t'; }

[[noreturn]] void fail(const std::string& message, std::size_t offset,
                       std::size_t line, std::size_t column) {
  throw ParseError("line " + std::to_string(line) + ", column " +
                       std::to_string(column) + ": " + message,
                   offset, line, column);
}

// Index of the first '#' outside a quoted string.
std::size_t comment_start(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted && c == '\\') {
      ++i;
    } else if (c == '"') {
      quoted = !quoted;
    } else if (c == '#' && !quoted) {
      return i;
    }
  }
  return line.size();
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!is_name_char(c)) return false;
  }
  return true;
}

const Entry* Section::find(std::string_view key) const {
  for (const auto& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

std::vector<Section> parse(std::string_view text) {
  std::vector<Section> sections;
  std::set<std::string> section_names;
  std::size_t pos = 0;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    ++line_no;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::size_t line_offset = pos;
    pos = eol + 1;

    std::string_view body = raw.substr(0, comment_start(raw));
    std::size_t b = 0;
    while (b < body.size() && is_blank(body[b])) ++b;
    std::size_t e = body.size();
    while (e > b && is_blank(body[e - 1])) --e;
    if (b == e) {
      if (eol == text.size()) break;
      continue;
    }
    const std::string_view content = body.substr(b, e - b);

    if (content.front() == '[') {
      if (content.back() != ']') {
        fail("unterminated section header", line_offset + b, line_no, b + 1);
      }
      const std::string name(content.substr(1, content.size() - 2));
      if (!is_identifier(name)) {
        fail("invalid section name '" + name + "'", line_offset + b, line_no,
             b + 1);
      }
      if (!section_names.insert(name).second) {
        fail("duplicate section [" + name + "]", line_offset + b, line_no,
             b + 1);
      }
      sections.push_back({name, line_no, {}});
    } else {
      const std::size_t eq = content.find('=');
      if (eq == std::string_view::npos) {
        fail("expected 'key = value'", line_offset + b, line_no, b + 1);
      }
      std::string_view key = content.substr(0, eq);
      while (!key.empty() && is_blank(key.back())) key.remove_suffix(1);
      if (!is_identifier(key)) {
        fail("invalid key '" + std::string(key) + "'", line_offset + b,
             line_no, b + 1);
      }
      std::size_t v = eq + 1;
      while (v < content.size() && is_blank(content[v])) ++v;
      const std::size_t column = b + v + 1;
      if (v == content.size()) {
        fail("missing value for '" + std::string(key) + "'",
             line_offset + b + v, line_no, column);
      }
      if (sections.empty()) {
        fail("entry outside of any section", line_offset + b, line_no, b + 1);
      }
      Section& section = sections.back();
      if (section.find(key) != nullptr) {
        fail("duplicate key '" + std::string(key) + "' in [" + section.name +
                 "]",
             line_offset + b, line_no, b + 1);
      }
      section.entries.push_back({std::string(key),
                                 std::string(content.substr(v)), line_no,
                                 column, line_offset + b + v});
    }
    if (eol == text.size()) break;
  }
  if (sections.empty()) {
    throw ParseError("scenario contains no sections", 0, line_no, 1);
  }
  return sections;
}

std::string unquote(const Entry& entry) {
  const std::string& v = entry.value;
  if (v.size() < 2 || v.front() != '"' || v.back() != '"') {
    fail("expected a quoted string", entry.offset, entry.line, entry.column);
  }
  std::string out;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    char c = v[i];
    if (c == '\\') {
      if (i + 2 >= v.size() || (v[i + 1] != '"' && v[i + 1] != '\\')) {
        fail("invalid escape", entry.offset + i, entry.line,
             entry.column + i);
      }
      c = v[++i];
    } else if (c == '"') {
      fail("unescaped quote", entry.offset + i, entry.line, entry.column + i);
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace evsust::document
