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

#ifndef FAIRNB_DATASET_H_
#define FAIRNB_DATASET_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fairnb/csv.h"
#include "fairnb/model_json.h"
#include "fairnb/schema.h"
#include "fairnb/statistics.h"

namespace fairnb {

// How to turn a CSV table into a discrete dataset.
struct SchemaConfig {
  std::string decision;
  // Label of the favourable decision; every other label is unfavourable.
  std::string positive;
  std::vector<std::string> sensitive;
  // Numeric columns and their equal-frequency bin counts.
  std::map<std::string, int> numeric;
  // Columns to keep (all when empty) and columns to drop.
  std::vector<std::string> columns;
  std::vector<std::string> drop;
  std::vector<std::string> missing{"", "?", "NA"};
  // Drop categorical columns whose every value is distinct (row ids).
  bool drop_unique = true;
  bool drop_duplicate = true;
};

// {"decision", "positive", "sensitive": [...], "numeric": {"col": bins},
//  "columns": [...], "drop": [...], "missing": [...]}
// A numeric entry may also be a bare column name in a list (2 bins).
SchemaConfig SchemaConfigFromJson(const Json& j);
SchemaConfig LoadSchemaConfig(const std::string& path);

struct DroppedColumn {
  std::string name;
  std::string reason;  // "unique", "duplicate:<other>", "constant", "config"
};

struct Provenance {
  std::string source;
  std::size_t rows_read = 0;
  std::size_t rows_dropped_missing = 0;
  std::vector<DroppedColumn> dropped_columns;
  // Bin edges of every numeric column that was kept.
  std::map<std::string, std::vector<double>> bin_edges;
};

struct Dataset {
  Schema schema;
  // rows[r][v] is the value index of variable v, decision included.
  std::vector<std::vector<ValueIndex>> rows;
  Provenance provenance;

  std::size_t size() const { return rows.size(); }
};

// Throws kIngestion on unreadable files, unknown columns, unparseable
// numeric cells, a missing positive label, or an empty result.
Dataset LoadCsv(const std::string& path, const SchemaConfig& config);
Dataset DatasetFromTable(const std::vector<CsvRow>& table,
                         const SchemaConfig& config,
                         const std::string& source = "<memory>");

// Rows selected by index, schema unchanged.
Dataset Subset(const Dataset& data, const std::vector<std::size_t>& indices);

SufficientStatistics Counts(const Dataset& data);

// FNV-1a over the schema and rows; equal datasets hash equal.
std::uint64_t Fingerprint(const Dataset& data);

}  // namespace fairnb

#endif  // FAIRNB_DATASET_H_
