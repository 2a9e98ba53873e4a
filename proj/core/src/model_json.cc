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

#include "fairnb/model_json.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fairnb/error.h"

namespace fairnb {
namespace {

VarIndex RequireVariable(const Schema& schema, const std::string& name) {
  auto v = schema.FindVariable(name);
  if (!v)
    throw Error(ErrorCode::kInvalidSchema, "unknown variable '" + name + "'");
  return *v;
}

ValueIndex RequireValue(const Schema& schema, VarIndex v,
                        const std::string& label) {
  auto z = schema.FindValue(v, label);
  if (!z) {
    throw Error(ErrorCode::kInvalidSchema, "unknown value '" + label +
                                               "' for variable '" +
                                               schema.variable(v).name + "'");
  }
  return *z;
}

}  // namespace

Json SchemaToJson(const Schema& schema) {
  Json vars = Json::array();
  for (const Variable& v : schema.variables()) {
    vars.push_back({{"name", v.name}, {"values", v.values}});
  }
  Json sensitive = Json::array();
  for (VarIndex s : schema.sensitive()) {
    sensitive.push_back(schema.variable(s).name);
  }
  const Variable& d = schema.variable(schema.decision());
  return Json{{"variables", vars},
              {"decision", d.name},
              {"positive", d.values[schema.positive_value()]},
              {"sensitive", sensitive}};
}

Schema SchemaFromJson(const Json& j) {
  try {
    std::vector<Variable> vars;
    for (const Json& v : j.at("variables")) {
      vars.push_back(Variable{v.at("name").get<std::string>(),
                              v.at("values").get<std::vector<std::string>>()});
    }
    const auto decision_name = j.at("decision").get<std::string>();
    VarIndex decision = -1;
    for (VarIndex i = 0; i < static_cast<int>(vars.size()); ++i) {
      if (vars[i].name == decision_name) decision = i;
    }
    if (decision < 0) {
      throw Error(ErrorCode::kInvalidSchema,
                  "decision variable '" + decision_name + "' not declared");
    }
    ValueIndex positive = 0;
    if (j.contains("positive")) {
      const auto label = j.at("positive").get<std::string>();
      const auto& values = vars[decision].values;
      auto it = std::find(values.begin(), values.end(), label);
      if (it == values.end()) {
        throw Error(ErrorCode::kInvalidSchema,
                    "positive label '" + label + "' not in decision domain");
      }
      positive = static_cast<ValueIndex>(it - values.begin());
    }
    std::vector<VarIndex> sensitive;
    for (const Json& s : j.value("sensitive", Json::array())) {
      const auto name = s.get<std::string>();
      VarIndex idx = -1;
      for (VarIndex i = 0; i < static_cast<int>(vars.size()); ++i) {
        if (vars[i].name == name) idx = i;
      }
      if (idx < 0) {
        throw Error(ErrorCode::kInvalidSchema,
                    "sensitive variable '" + name + "' not declared");
      }
      sensitive.push_back(idx);
    }
    return Schema(std::move(vars), decision, positive, std::move(sensitive));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidSchema,
                std::string("malformed schema JSON: ") + e.what());
  }
}

Json ModelToJson(const NaiveBayesModel& model) {
  const Schema& schema = model.schema();
  Json cpts = Json::object();
  for (VarIndex v : schema.features()) {
    cpts[schema.variable(v).name] = {{"positive", model.cpts()[v][0]},
                                     {"negative", model.cpts()[v][1]}};
  }
  return Json{{"schema", SchemaToJson(schema)},
              {"prior", model.prior()},
              {"cpts", cpts}};
}

NaiveBayesModel ModelFromJson(const Json& j) {
  Schema schema = SchemaFromJson(j.at("schema"));
  try {
    std::vector<ClassTable> cpts(schema.num_variables());
    const Json& tables = j.at("cpts");
    for (VarIndex v : schema.features()) {
      const Json& t = tables.at(schema.variable(v).name);
      cpts[v][0] = t.at("positive").get<std::vector<double>>();
      cpts[v][1] = t.at("negative").get<std::vector<double>>();
    }
    return NaiveBayesModel(std::move(schema), j.at("prior").get<double>(),
                           std::move(cpts));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidModel,
                std::string("malformed model JSON: ") + e.what());
  }
}

Json AssignmentToJson(const Schema& schema, const Assignment& a) {
  Json out = Json::object();
  for (const Binding& b : a) {
    const Variable& v = schema.variable(b.var);
    out[v.name] = v.values.at(b.value);
  }
  return out;
}

Assignment AssignmentFromJson(const Schema& schema, const Json& j) {
  Assignment a;
  for (const auto& [name, value] : j.items()) {
    const VarIndex v = RequireVariable(schema, name);
    a.Bind(v, RequireValue(schema, v, value.get<std::string>()));
  }
  return a;
}

Json LoadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIngestion, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kIngestion,
                "cannot parse '" + path + "': " + e.what());
  }
}

NaiveBayesModel LoadModel(const std::string& path) {
  return ModelFromJson(LoadJson(path));
}

void SaveJson(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIngestion, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace fairnb
