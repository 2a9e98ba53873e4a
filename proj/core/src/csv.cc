// Copyright 2026 The fairnb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairnb/csv.h"

#include <iterator>
#include <sstream>

#include "fairnb/error.h"

namespace fairnb {

std::vector<CsvRow> ParseCsv(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  return ParseCsvString(text);
}

std::vector<CsvRow> ParseCsvString(const std::string& text) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  bool quoted = false;      // inside a quoted field
  bool was_quoted = false;  // current field started with a quote
  bool row_started = false;
  int line = 1;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    was_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
    row_started = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (ch == '\n') ++line;
        field.push_back(ch);
      }
      continue;
    }
    switch (ch) {
      case '"':
        if (!field.empty() || was_quoted) {
          throw Error(ErrorCode::kIngestion,
                      "stray quote on line " + std::to_string(line));
        }
        quoted = true;
        was_quoted = true;
        row_started = true;
        break;
      case ',':
        end_field();
        row_started = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        end_row();
        ++line;
        break;
      case '\n':
        end_row();
        ++line;
        break;
      default:
        if (was_quoted) {
          throw Error(
              ErrorCode::kIngestion,
              "text after closing quote on line " + std::to_string(line));
        }
        field.push_back(ch);
        row_started = true;
    }
  }
  if (quoted) {
    throw Error(ErrorCode::kIngestion, "unterminated quoted field");
  }
  if (row_started || !field.empty()) end_row();
  return rows;
}

}  // namespace fairnb
