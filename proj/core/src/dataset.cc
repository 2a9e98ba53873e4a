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

#include "fairnb/dataset.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>

#include "fairnb/error.h"

namespace fairnb {
namespace {

bool Contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

double ParseNumber(const std::string& cell, const std::string& column) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  while (begin < end && *begin == ' ') ++begin;
  while (end > begin && end[-1] == ' ') --end;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(
        ErrorCode::kIngestion,
        "cannot parse '" + cell + "' in numeric column '" + column + "'");
  }
  return value;
}

std::string FormatEdge(double e) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", e);
  return buf;
}

struct Column {
  std::string name;
  std::vector<std::string> labels;  // domain
  std::vector<ValueIndex> values;   // per row
};

Column Categorical(const std::string& name,
                   const std::vector<std::string>& cells) {
  Column c;
  c.name = name;
  std::set<std::string> domain(cells.begin(), cells.end());
  c.labels.assign(domain.begin(), domain.end());
  c.values.reserve(cells.size());
  for (const std::string& s : cells) {
    c.values.push_back(static_cast<ValueIndex>(
        std::lower_bound(c.labels.begin(), c.labels.end(), s) -
        c.labels.begin()));
  }
  return c;
}

Column Binned(const std::string& name, const std::vector<std::string>& cells,
              int bins, std::vector<double>& edges) {
  if (bins < 2) {
    throw Error(ErrorCode::kIngestion,
                "numeric column '" + name + "' needs at least 2 bins");
  }
  std::vector<double> x;
  x.reserve(cells.size());
  for (const std::string& s : cells) x.push_back(ParseNumber(s, name));
  std::vector<double> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  edges.clear();
  const std::size_t n = sorted.size();
  for (int k = 1; k < bins; ++k) {
    const double e = sorted[std::min(n - 1, k * n / bins)];
    // An edge at the minimum would leave its lower bin empty.
    if (e > sorted.front() && (edges.empty() || e > edges.back())) {
      edges.push_back(e);
    }
  }
  Column c;
  c.name = name;
  const std::size_t nb = edges.size() + 1;
  for (std::size_t b = 0; b < nb; ++b) {
    if (nb == 1) {
      c.labels.push_back("all");
    } else if (b == 0) {
      c.labels.push_back("<" + FormatEdge(edges[0]));
    } else if (b + 1 == nb) {
      c.labels.push_back(">=" + FormatEdge(edges[b - 1]));
    } else {
      c.labels.push_back("[" + FormatEdge(edges[b - 1]) + "," +
                         FormatEdge(edges[b]) + ")");
    }
  }
  for (double v : x) {
    c.values.push_back(static_cast<ValueIndex>(
        std::upper_bound(edges.begin(), edges.end(), v) - edges.begin()));
  }
  return c;
}

void Mix(std::uint64_t& h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
}

void MixString(std::uint64_t& h, const std::string& s) {
  const std::uint64_t len = s.size();
  Mix(h, &len, sizeof len);
  Mix(h, s.data(), s.size());
}

}  // namespace

SchemaConfig SchemaConfigFromJson(const Json& j) {
  try {
    SchemaConfig c;
    c.decision = j.at("decision").get<std::string>();
    c.positive = j.at("positive").get<std::string>();
    c.sensitive = j.value("sensitive", std::vector<std::string>{});
    if (j.contains("numeric")) {
      const Json& num = j.at("numeric");
      if (num.is_array()) {
        for (const Json& name : num) c.numeric[name.get<std::string>()] = 2;
      } else {
        for (const auto& [name, bins] : num.items()) {
          c.numeric[name] = bins.get<int>();
        }
      }
    }
    c.columns = j.value("columns", std::vector<std::string>{});
    c.drop = j.value("drop", std::vector<std::string>{});
    if (j.contains("missing")) {
      c.missing = j.at("missing").get<std::vector<std::string>>();
    }
    c.drop_unique = j.value("drop_unique", true);
    c.drop_duplicate = j.value("drop_duplicate", true);
    return c;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kIngestion,
                std::string("malformed schema config: ") + e.what());
  }
}

SchemaConfig LoadSchemaConfig(const std::string& path) {
  return SchemaConfigFromJson(LoadJson(path));
}

Dataset LoadCsv(const std::string& path, const SchemaConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIngestion, "cannot open '" + path + "'");
  return DatasetFromTable(ParseCsv(in), config, path);
}

Dataset DatasetFromTable(const std::vector<CsvRow>& table,
                         const SchemaConfig& config,
                         const std::string& source) {
  if (table.empty()) throw Error(ErrorCode::kIngestion, "missing header row");
  const CsvRow& header = table.front();
  auto column_of = [&](const std::string& name) -> std::size_t {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw Error(ErrorCode::kIngestion, "unknown column '" + name + "'");
    }
    return static_cast<std::size_t>(it - header.begin());
  };

  Provenance prov;
  prov.source = source;
  std::vector<std::string> selected;
  for (const std::string& name : config.columns) column_of(name);
  for (const std::string& name : config.drop) column_of(name);
  for (const std::string& name : config.sensitive) column_of(name);
  for (const auto& [name, bins] : config.numeric) column_of(name);
  column_of(config.decision);
  for (const std::string& name : header) {
    const bool keep = name == config.decision || config.columns.empty() ||
                      Contains(config.columns, name);
    if (!keep) continue;
    if (Contains(config.drop, name)) {
      if (name == config.decision) {
        throw Error(ErrorCode::kIngestion, "cannot drop the decision column");
      }
      prov.dropped_columns.push_back({name, "config"});
      continue;
    }
    if (Contains(selected, name)) {
      throw Error(ErrorCode::kIngestion,
                  "duplicate column name '" + name + "'");
    }
    selected.push_back(name);
  }

  // Cells of the selected columns for complete rows.
  std::vector<std::size_t> positions;
  for (const std::string& name : selected) positions.push_back(column_of(name));
  std::vector<std::vector<std::string>> cells(selected.size());
  for (std::size_t r = 1; r < table.size(); ++r) {
    const CsvRow& row = table[r];
    if (row.size() == 1 && row[0].empty() && header.size() > 1) continue;
    if (row.size() != header.size()) {
      throw Error(ErrorCode::kIngestion,
                  "record " + std::to_string(r + 1) + " has " +
                      std::to_string(row.size()) + " fields, expected " +
                      std::to_string(header.size()));
    }
    ++prov.rows_read;
    bool missing = false;
    for (std::size_t p : positions) {
      if (Contains(config.missing, row[p])) missing = true;
    }
    if (missing) {
      ++prov.rows_dropped_missing;
      continue;
    }
    for (std::size_t c = 0; c < positions.size(); ++c) {
      cells[c].push_back(row[positions[c]]);
    }
  }
  const std::size_t n = cells.empty() ? 0 : cells.front().size();
  if (n == 0) throw Error(ErrorCode::kIngestion, "no complete rows");

  // Decision: positive label first, every other label folded into one.
  const std::size_t dpos = static_cast<std::size_t>(
      std::find(selected.begin(), selected.end(), config.decision) -
      selected.begin());
  std::set<std::string> decision_labels(cells[dpos].begin(), cells[dpos].end());
  if (!decision_labels.count(config.positive)) {
    throw Error(ErrorCode::kIngestion, "positive label '" + config.positive +
                                           "' never occurs in '" +
                                           config.decision + "'");
  }
  if (decision_labels.size() < 2) {
    throw Error(ErrorCode::kIngestion,
                "decision column '" + config.decision + "' is constant");
  }
  decision_labels.erase(config.positive);
  Column decision;
  decision.name = config.decision;
  decision.labels = {config.positive, decision_labels.size() == 1
                                          ? *decision_labels.begin()
                                          : "not " + config.positive};
  for (const std::string& s : cells[dpos]) {
    decision.values.push_back(s == config.positive ? 0 : 1);
  }

  std::vector<Column> features;
  std::vector<std::vector<std::string>> raw;  // for duplicate detection
  for (std::size_t c = 0; c < selected.size(); ++c) {
    if (c == dpos) continue;
    const std::string& name = selected[c];
    std::set<std::string> distinct(cells[c].begin(), cells[c].end());
    const bool numeric = config.numeric.count(name) > 0;
    if (config.drop_unique && !numeric && distinct.size() == n && n > 2) {
      prov.dropped_columns.push_back({name, "unique"});
      continue;
    }
    Column col;
    auto num = config.numeric.find(name);
    std::vector<double> edges;
    if (num != config.numeric.end()) {
      col = Binned(name, cells[c], num->second, edges);
    } else {
      col = Categorical(name, cells[c]);
    }
    if (col.labels.size() < 2) {
      prov.dropped_columns.push_back({name, "constant"});
      continue;
    }
    if (config.drop_duplicate) {
      auto dup = std::find(raw.begin(), raw.end(), cells[c]);
      if (dup != raw.end()) {
        prov.dropped_columns.push_back(
            {name, "duplicate:" + features[dup - raw.begin()].name});
        continue;
      }
    }
    if (num != config.numeric.end()) prov.bin_edges[name] = edges;
    raw.push_back(cells[c]);
    features.push_back(std::move(col));
  }

  std::vector<Variable> vars;
  std::vector<VarIndex> sensitive;
  vars.push_back({decision.name, decision.labels});
  for (const Column& f : features) {
    if (Contains(config.sensitive, f.name)) {
      sensitive.push_back(static_cast<VarIndex>(vars.size()));
    }
    vars.push_back({f.name, f.labels});
  }
  Dataset data{Schema(std::move(vars), 0, 0, std::move(sensitive)), {}, {}};
  data.rows.assign(n, std::vector<ValueIndex>(features.size() + 1));
  for (std::size_t r = 0; r < n; ++r) {
    data.rows[r][0] = decision.values[r];
    for (std::size_t f = 0; f < features.size(); ++f) {
      data.rows[r][f + 1] = features[f].values[r];
    }
  }
  data.provenance = std::move(prov);
  return data;
}

Dataset Subset(const Dataset& data, const std::vector<std::size_t>& indices) {
  Dataset out{data.schema, {}, data.provenance};
  out.rows.reserve(indices.size());
  for (std::size_t i : indices) out.rows.push_back(data.rows.at(i));
  return out;
}

SufficientStatistics Counts(const Dataset& data) {
  const Schema& schema = data.schema;
  SufficientStatistics s = SufficientStatistics::Zeros(schema);
  const VarIndex dvar = schema.decision();
  for (const auto& row : data.rows) {
    const int c = row[dvar] == schema.positive_value() ? 0 : 1;
    s.decision[c] += 1.0;
    for (VarIndex v : schema.features()) s.features[v][c][row[v]] += 1.0;
  }
  s.total = static_cast<double>(data.rows.size());
  return s;
}

std::uint64_t Fingerprint(const Dataset& data) {
  std::uint64_t h = 14695981039346656037ull;
  const Schema& schema = data.schema;
  for (const Variable& v : schema.variables()) {
    MixString(h, v.name);
    for (const std::string& label : v.values) MixString(h, label);
  }
  const std::int64_t header[2] = {schema.decision(), schema.positive_value()};
  Mix(h, header, sizeof header);
  for (VarIndex s : schema.sensitive()) Mix(h, &s, sizeof s);
  for (const auto& row : data.rows)
    Mix(h, row.data(), row.size() * sizeof row[0]);
  return h;
}

}  // namespace fairnb
