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

#include "fairnb/report_json.h"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace fairnb {
namespace {

Json VariableNames(const Schema& schema, const std::vector<VarIndex>& vars) {
  Json out = Json::array();
  for (VarIndex v : vars) out.push_back(schema.variable(v).name);
  return out;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool InTop(const std::vector<Pattern>& top, const Pattern& p) {
  for (const Pattern& q : top) {
    if (SameIdentity(p, q)) return true;
  }
  return false;
}

}  // namespace

Json PatternToJson(const Schema& schema, const Pattern& p) {
  Json j;
  j["x"] = AssignmentToJson(schema, p.x);
  j["y"] = AssignmentToJson(schema, p.y);
  j["delta"] = p.delta;
  j["abs_delta"] = std::abs(p.delta);
  j["divergence"] = p.divergence;
  j["mass"] = p.mass;
  return j;
}

Json MiningReportToJson(const Schema& schema, const MiningReport& report) {
  Json j;
  j["kind"] = "mining";
  j["delta"] = report.delta;
  j["k"] = report.k ? Json(*report.k) : Json(nullptr);
  j["ranking"] = report.ranking
                     ? Json(std::string(RankingName(*report.ranking)))
                     : Json(nullptr);
  j["search_space_size"] = report.search_space_size;
  j["nodes_visited"] = report.nodes_visited;
  j["nodes_pruned"] = report.nodes_pruned;
  j["explored_fraction"] = report.ExploredFraction();
  j["certified_fair"] = report.certified_fair;
  j["branching_order"] = VariableNames(schema, report.branching_order);
  Json patterns = Json::array();
  for (const Pattern& p : report.patterns) {
    patterns.push_back(PatternToJson(schema, p));
  }
  j["patterns"] = std::move(patterns);
  return j;
}

Json VerifyResultToJson(const Schema& schema, const VerifyResult& result,
                        double delta) {
  Json j;
  j["kind"] = "verify";
  j["delta"] = delta;
  j["fair"] = result.fair;
  j["nodes_visited"] = result.nodes_visited;
  j["witness"] =
      result.witness ? PatternToJson(schema, *result.witness) : Json(nullptr);
  return j;
}

Json LearnReportToJson(const LearnReport& report, bool include_timing) {
  const Schema& schema = report.model.schema();
  Json j;
  j["kind"] = "learn";
  j["delta"] = report.delta;
  j["k"] = report.k;
  j["ranking"] = std::string(RankingName(report.ranking));
  j["fair"] = report.fair;
  j["iterations"] = report.iterations;
  j["constraints_added"] = report.constraints_added;
  Json constraints = Json::array();
  for (const FairnessConstraint& c : report.constraints) {
    constraints.push_back({{"x", AssignmentToJson(schema, c.x)},
                           {"y", AssignmentToJson(schema, c.y)},
                           {"delta", c.delta}});
  }
  j["constraints"] = std::move(constraints);
  Json trace = Json::array();
  for (const LearnIteration& it : report.trace) {
    Json t;
    t["log_likelihood"] = it.log_likelihood;
    t["remaining_patterns"] =
        it.remaining_patterns ? Json(*it.remaining_patterns) : Json(nullptr);
    t["constraints_added"] = it.constraints_added;
    t["duplicates"] = it.duplicates;
    t["solver_status"] = it.solver_status;
    t["solver_iterations"] = it.solver_iterations;
    t["feasibility_tolerance"] = it.feasibility_tolerance;
    if (include_timing) t["seconds"] = it.seconds;
    trace.push_back(std::move(t));
  }
  j["trace"] = std::move(trace);
  j["model"] = ModelToJson(report.model);
  return j;
}

Json CrossValidationToJson(const CrossValidation& cv) {
  Json j;
  j["folds"] = cv.folds;
  j["seed"] = cv.seed;
  j["fold_sizes"] = cv.fold_sizes;
  j["accuracies"] = cv.accuracies;
  j["mean_accuracy"] = cv.MeanAccuracy();
  return j;
}

Json ProvenanceToJson(const Provenance& provenance) {
  Json j;
  j["source"] = provenance.source;
  j["rows_read"] = provenance.rows_read;
  j["rows_dropped_missing"] = provenance.rows_dropped_missing;
  Json dropped = Json::array();
  for (const DroppedColumn& d : provenance.dropped_columns) {
    dropped.push_back({{"name", d.name}, {"reason", d.reason}});
  }
  j["dropped_columns"] = std::move(dropped);
  Json edges = Json::object();
  for (const auto& [name, e] : provenance.bin_edges) edges[name] = e;
  j["bin_edges"] = std::move(edges);
  return j;
}

std::string PatternsCsv(const Schema& schema,
                        const std::vector<Pattern>& patterns) {
  std::ostringstream out;
  out << "x,y,delta,divergence,mass\n";
  for (const Pattern& p : patterns) {
    out << CsvField(FormatAssignment(schema, p.x)) << ','
        << CsvField(FormatAssignment(schema, p.y)) << ',' << Number(p.delta)
        << ',' << Number(p.divergence) << ',' << Number(p.mass) << '\n';
  }
  return out.str();
}

std::string ScatterCsv(const Schema& schema, const std::vector<Pattern>& all,
                       int k) {
  const auto top_disc = TopK(all, k, Ranking::kDiscrimination);
  const auto top_div = TopK(all, k, Ranking::kDivergence);
  std::ostringstream out;
  out << "x,y,mass,abs_delta,divergence,top_discrimination,top_divergence\n";
  for (const Pattern& p : all) {
    out << CsvField(FormatAssignment(schema, p.x)) << ','
        << CsvField(FormatAssignment(schema, p.y)) << ',' << Number(p.mass)
        << ',' << Number(std::abs(p.delta)) << ',' << Number(p.divergence)
        << ',' << (InTop(top_disc, p) ? 1 : 0) << ','
        << (InTop(top_div, p) ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace fairnb
