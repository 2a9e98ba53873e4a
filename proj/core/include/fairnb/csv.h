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

#ifndef FAIRNB_CSV_H_
#define FAIRNB_CSV_H_

#include <istream>
#include <string>
#include <vector>

namespace fairnb {

using CsvRow = std::vector<std::string>;

// RFC 4180 records: comma separated, optional double quotes, "" inside a
// quoted field, CRLF or LF line ends, line breaks allowed inside quotes.
// A trailing empty line is ignored. Throws kIngestion on an unterminated
// quote or a stray quote inside an unquoted field.
std::vector<CsvRow> ParseCsv(std::istream& in);
std::vector<CsvRow> ParseCsvString(const std::string& text);

}  // namespace fairnb

#endif  // FAIRNB_CSV_H_
