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

#include "testing/fixtures.h"

#include <algorithm>
#include <cmath>

#include "fairnb/schema.h"

namespace fairnb::testing {
namespace {

std::vector<double> RandomColumn(std::mt19937_64& rng, int card, double floor) {
  std::uniform_real_distribution<double> u(floor, 1.0);
  std::vector<double> col(card);
  double sum = 0.0;
  for (double& p : col) sum += (p = u(rng));
  for (double& p : col) p /= sum;
  return col;
}

std::vector<VarIndex> FeatureOrder(const NaiveBayesModel& model) {
  return model.schema().features();
}

// Calls f on every completion of `partial` over `vars`.
void ForEachCompletion(const NaiveBayesModel& model, Assignment partial,
                       const std::vector<VarIndex>& vars, std::size_t i,
                       const std::function<void(const Assignment&)>& f) {
  if (i == vars.size()) {
    f(partial);
    return;
  }
  for (ValueIndex z = 0; z < model.schema().cardinality(vars[i]); ++z) {
    ForEachCompletion(model, partial.With(vars[i], z), vars, i + 1, f);
  }
}

void ExtendRec(const NaiveBayesModel& model, const std::vector<VarIndex>& free,
               std::size_t i, const Assignment& x, const Assignment& y,
               std::vector<std::pair<Assignment, Assignment>>& out) {
  if (i == free.size()) {
    out.emplace_back(x, y);
    return;
  }
  const VarIndex v = free[i];
  ExtendRec(model, free, i + 1, x, y, out);
  for (ValueIndex z = 0; z < model.schema().cardinality(v); ++z) {
    if (model.schema().IsSensitive(v)) {
      ExtendRec(model, free, i + 1, x.With(v, z), y, out);
    }
    ExtendRec(model, free, i + 1, x, y.With(v, z), out);
  }
}

}  // namespace

NaiveBayesModel ExampleModel() {
  Schema schema({{"D", {"d", "dbar"}},
                 {"X", {"x", "xbar"}},
                 {"Y1", {"y1", "y1bar"}},
                 {"Y2", {"y2", "y2bar"}}},
                0, 0, {1});
  std::vector<ClassTable> cpts(4);
  cpts[1] = {std::vector<double>{0.8, 0.2}, std::vector<double>{0.5, 0.5}};
  cpts[2] = {std::vector<double>{0.7, 0.3}, std::vector<double>{0.1, 0.9}};
  cpts[3] = {std::vector<double>{0.8, 0.2}, std::vector<double>{0.3, 0.7}};
  return NaiveBayesModel(std::move(schema), 0.2, std::move(cpts));
}

NaiveBayesModel RandomModel(std::mt19937_64& rng, const RandomModelSpec& spec) {
  std::uniform_int_distribution<int> arity(spec.min_arity, spec.max_arity);
  std::vector<Variable> vars{{"D", {"pos", "neg"}}};
  std::vector<VarIndex> sensitive;
  for (int f = 0; f < spec.num_features; ++f) {
    Variable v{"F" + std::to_string(f), {}};
    const int card = arity(rng);
    for (int z = 0; z < card; ++z) v.values.push_back("v" + std::to_string(z));
    vars.push_back(std::move(v));
    if (f < spec.num_sensitive) sensitive.push_back(f + 1);
  }
  Schema schema(std::move(vars), 0, 0, std::move(sensitive));
  std::vector<ClassTable> cpts(schema.num_variables());
  for (VarIndex v : schema.features()) {
    const int card = schema.cardinality(v);
    cpts[v] = {RandomColumn(rng, card, spec.floor),
               RandomColumn(rng, card, spec.floor)};
  }
  std::uniform_real_distribution<double> prior(0.1, 0.9);
  const double p = prior(rng);
  return NaiveBayesModel(std::move(schema), p, std::move(cpts));
}

Dataset SampleDataset(const NaiveBayesModel& model, std::size_t n,
                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Schema& schema = model.schema();
  Dataset data{schema, {}, {}};
  data.provenance.source = "<sample>";
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<ValueIndex> row(schema.num_variables());
    const int c = u(rng) < model.prior() ? 0 : 1;
    row[schema.decision()] =
        c == 0 ? schema.positive_value() : schema.negative_value();
    for (VarIndex v : schema.features()) {
      const auto& col = model.cpts()[v][c];
      std::discrete_distribution<int> pick(col.begin(), col.end());
      row[v] = pick(rng);
    }
    data.rows.push_back(std::move(row));
  }
  data.provenance.rows_read = n;
  return data;
}

double DirectJoint(const NaiveBayesModel& model, int c,
                   const Assignment& evidence) {
  double p = c == 0 ? model.prior() : 1.0 - model.prior();
  for (const Binding& b : evidence) p *= model.cpts()[b.var][c][b.value];
  return p;
}

double EnumeratedMarginal(const NaiveBayesModel& model, int c,
                          const Assignment& evidence) {
  std::vector<VarIndex> rest;
  for (VarIndex v : FeatureOrder(model)) {
    if (!evidence.Contains(v)) rest.push_back(v);
  }
  double total = 0.0;
  ForEachCompletion(model, evidence, rest, 0, [&](const Assignment& full) {
    total += DirectJoint(model, c, full);
  });
  return total;
}

double DirectPosterior(const NaiveBayesModel& model, const Assignment& e) {
  const double pd = DirectJoint(model, 0, e);
  const double pn = DirectJoint(model, 1, e);
  return pd / (pd + pn);
}

double DirectDelta(const NaiveBayesModel& model, const Assignment& x,
                   const Assignment& y) {
  return DirectPosterior(model, Assignment::Union(x, y)) -
         DirectPosterior(model, y);
}

double DirectG(double p_dxy, double p_ndxy, double r) {
  return p_dxy * std::log(p_dxy / (p_dxy + r)) +
         p_ndxy * std::log(p_ndxy / (p_ndxy - r));
}

double GoldenSection(const std::function<double(double)>& f, double a, double b,
                     double tol) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return std::min({f(a), f(b), f(0.5 * (a + b))});
}

std::pair<double, double> GridMin(const std::function<double(double)>& f,
                                  double a, double b, double step) {
  double best_x = a;
  double best = f(a);
  const long n = static_cast<long>(std::ceil((b - a) / step));
  for (long i = 1; i <= n; ++i) {
    const double x = std::min(b, a + static_cast<double>(i) * step);
    const double v = f(x);
    if (v < best) {
      best = v;
      best_x = x;
    }
  }
  return {best_x, best};
}

double GoldenSectionDivergence(const NaiveBayesModel& model,
                               const Assignment& x, const Assignment& y,
                               double delta, double tol) {
  const Assignment xy = Assignment::Union(x, y);
  const double p_dxy = DirectJoint(model, 0, xy);
  const double p_ndxy = DirectJoint(model, 1, xy);
  const double p_xy = p_dxy + p_ndxy;
  const double p_y = DirectJoint(model, 0, y) + DirectJoint(model, 1, y);
  const double k = 1.0 / p_xy - 1.0 / p_y;
  const double disc = DirectDelta(model, x, y);
  const double lo = std::max(-p_dxy, (-delta - disc) / k);
  const double hi = std::min(p_ndxy, (delta - disc) / k);
  auto g = [&](double r) { return DirectG(p_dxy, p_ndxy, r); };
  if (lo <= 0.0 && 0.0 <= hi) return 0.0;
  return GoldenSection(g, lo, hi, tol);
}

std::vector<std::pair<Assignment, Assignment>> Extensions(
    const NaiveBayesModel& model, const Assignment& x, const Assignment& y,
    const std::vector<VarIndex>& excluded) {
  std::vector<VarIndex> free;
  for (VarIndex v : model.schema().features()) {
    if (x.Contains(v) || y.Contains(v)) continue;
    if (std::find(excluded.begin(), excluded.end(), v) != excluded.end()) {
      continue;
    }
    free.push_back(v);
  }
  std::vector<std::pair<Assignment, Assignment>> out;
  ExtendRec(model, free, 0, x, y, out);
  return out;
}

std::vector<Pattern> OraclePatterns(const NaiveBayesModel& model,
                                    double delta) {
  std::vector<Pattern> out;
  for (const auto& [x, y] : Extensions(model, {}, {}, {})) {
    if (x.empty()) continue;
    Pattern p;
    p.x = x;
    p.y = y;
    p.delta = DirectDelta(model, x, y);
    const Assignment xy = Assignment::Union(x, y);
    p.mass = DirectJoint(model, 0, xy) + DirectJoint(model, 1, xy);
    if (IsDiscriminating(p.delta, delta)) {
      p.divergence = GoldenSectionDivergence(model, x, y, delta);
    }
    out.push_back(std::move(p));
  }
  return out;
}

Prefix RandomPrefix(std::mt19937_64& rng, const NaiveBayesModel& model) {
  const Schema& schema = model.schema();
  std::uniform_int_distribution<int> role(0, 3);
  Prefix p;
  for (VarIndex v : schema.features()) {
    std::uniform_int_distribution<int> value(0, schema.cardinality(v) - 1);
    switch (role(rng)) {
      case 0:
        if (schema.IsSensitive(v)) {
          p.x.Bind(v, value(rng));
          break;
        }
        [[fallthrough]];
      case 1:
        p.y.Bind(v, value(rng));
        break;
      case 2:
        p.excluded.push_back(v);
        break;
      default:
        break;
    }
  }
  return p;
}

}  // namespace fairnb::testing
