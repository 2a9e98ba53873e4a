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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fairnb/dataset.h"
#include "fairnb/error.h"
#include "fairnb/estimation.h"
#include "fairnb/evaluation.h"
#include "fairnb/learner.h"
#include "fairnb/miner.h"
#include "fairnb/model_json.h"
#include "fairnb/report_json.h"

namespace fairnb::cli {
namespace {

struct Flags {
  std::string model;
  std::string data;
  std::string schema;
  double delta = 0.1;
  int k = 0;
  std::string ranking = "discrimination";
  std::string out;
  std::uint64_t seed = kDefaultFoldSeed;
  std::string format = "json";
  double alpha = 1.0;
  int folds = 10;
  std::string model_out;
  bool timing = false;
  bool trace_remaining = false;
  int max_iterations = 100;
};

// Usage problems found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIngestion:
    case ErrorCode::kInvalidModel:
    case ErrorCode::kInvalidSchema:
    case ErrorCode::kMustSmooth:
      return kExitIngestion;
    case ErrorCode::kSolverFailure:
      return kExitSolver;
    default:
      return kExitUsage;
  }
}

void ReportError(std::ostream& err, std::string_view kind,
                 const std::string& message, int exit_code) {
  Json j;
  j["error"] = std::string(kind);
  j["message"] = message;
  j["exit_code"] = exit_code;
  err << j.dump() << '\n';
}

void Emit(const std::string& text, const Flags& flags, std::ostream& out) {
  if (flags.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(flags.out, std::ios::binary);
  if (!file)
    throw Error(ErrorCode::kIngestion, "cannot write '" + flags.out + "'");
  file << text;
}

void EmitJson(const Json& j, const Flags& flags, std::ostream& out) {
  Emit(j.dump(2) + "\n", flags, out);
}

std::string Number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Dataset LoadData(const Flags& flags) {
  return LoadCsv(flags.data, LoadSchemaConfig(flags.schema));
}

void RequireDeltaRange(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw UsageError("--delta must lie in [0, 1]");
  }
}

int RunFit(const Flags& flags, std::ostream& out) {
  const Dataset data = LoadData(flags);
  const NaiveBayesModel model = Fit(data.schema, Counts(data), flags.alpha);
  if (!flags.model_out.empty()) SaveJson(ModelToJson(model), flags.model_out);
  Json j;
  j["kind"] = "fit";
  j["rows"] = data.size();
  j["alpha"] = flags.alpha;
  j["provenance"] = ProvenanceToJson(data.provenance);
  j["log_likelihood"] = DatasetLogLikelihood(model, data);
  j["search_space_size"] = SearchSpaceSize(data.schema);
  j["model"] = ModelToJson(model);
  EmitJson(j, flags, out);
  return kExitOk;
}

int RunVerify(const Flags& flags, std::ostream& out) {
  RequireDeltaRange(flags.delta);
  const NaiveBayesModel model = LoadModel(flags.model);
  const VerifyResult result = VerifyFair(model, flags.delta);
  EmitJson(VerifyResultToJson(model.schema(), result, flags.delta), flags, out);
  return result.fair ? kExitOk : kExitUnfair;
}

int RunMine(const Flags& flags, std::ostream& out) {
  RequireDeltaRange(flags.delta);
  const NaiveBayesModel model = LoadModel(flags.model);
  const MiningReport report =
      flags.k > 0
          ? MineTopK(model, flags.delta, flags.k, ParseRanking(flags.ranking))
          : MineAll(model, flags.delta);
  if (flags.format == "csv") {
    Emit(PatternsCsv(model.schema(), report.patterns), flags, out);
  } else {
    EmitJson(MiningReportToJson(model.schema(), report), flags, out);
  }
  return kExitOk;
}

LearnOptions MakeLearnOptions(const Flags& flags) {
  LearnOptions options;
  options.delta = flags.delta;
  options.k = std::max(flags.k, 1);
  options.ranking = ParseRanking(flags.ranking);
  options.alpha = flags.alpha;
  options.max_outer_iterations = flags.max_iterations;
  options.trace_remaining_patterns = flags.trace_remaining;
  return options;
}

int RunLearn(const Flags& flags, std::ostream& out) {
  const Dataset data = LoadData(flags);
  const LearnReport report =
      LearnFair(data.schema, Counts(data), MakeLearnOptions(flags));
  if (!flags.model_out.empty()) {
    SaveJson(ModelToJson(report.model), flags.model_out);
  }
  Json j = LearnReportToJson(report, flags.timing);
  j["provenance"] = ProvenanceToJson(data.provenance);
  EmitJson(j, flags, out);
  return kExitOk;
}

struct EvalRow {
  std::string name;
  double log_likelihood = 0.0;
  double train_accuracy = 0.0;
  std::optional<CrossValidation> cv;
};

int RunEval(const Flags& flags, bool with_fair, std::ostream& out) {
  const Dataset data = LoadData(flags);
  const LearnOptions options = MakeLearnOptions(flags);
  std::vector<std::pair<std::string, Learner>> learners;
  learners.emplace_back("unconstrained", [&](const Dataset& d) {
    return Fit(d.schema, Counts(d), flags.alpha);
  });
  if (with_fair) {
    learners.emplace_back("delta-fair", [&](const Dataset& d) {
      return LearnFair(d.schema, Counts(d), options).model;
    });
  }
  learners.emplace_back("independent", [&](const Dataset& d) {
    return IndependentBaseline(d.schema, Counts(d), flags.alpha);
  });

  std::vector<EvalRow> rows;
  for (const auto& [name, learn] : learners) {
    EvalRow row;
    row.name = name;
    const NaiveBayesModel model = learn(data);
    row.log_likelihood = DatasetLogLikelihood(model, data);
    row.train_accuracy = Accuracy(model, data);
    if (flags.folds > 0)
      row.cv = CrossValidate(data, flags.folds, learn, flags.seed);
    rows.push_back(std::move(row));
  }

  if (flags.format == "csv") {
    std::ostringstream csv;
    csv << "model,log_likelihood,train_accuracy,cv_accuracy\n";
    for (const EvalRow& r : rows) {
      csv << r.name << ',' << Number(r.log_likelihood) << ','
          << Number(r.train_accuracy) << ','
          << (r.cv ? Number(r.cv->MeanAccuracy()) : std::string()) << '\n';
    }
    Emit(csv.str(), flags, out);
    return kExitOk;
  }
  Json j;
  j["kind"] = "eval";
  j["rows"] = data.size();
  j["alpha"] = flags.alpha;
  j["delta"] = with_fair ? Json(flags.delta) : Json(nullptr);
  j["seed"] = flags.seed;
  Json models = Json::array();
  for (const EvalRow& r : rows) {
    Json m;
    m["name"] = r.name;
    m["log_likelihood"] = r.log_likelihood;
    m["train_accuracy"] = r.train_accuracy;
    m["cross_validation"] = r.cv ? CrossValidationToJson(*r.cv) : Json(nullptr);
    models.push_back(std::move(m));
  }
  j["models"] = std::move(models);
  EmitJson(j, flags, out);
  return kExitOk;
}

int RunScatter(const Flags& flags, std::ostream& out) {
  RequireDeltaRange(flags.delta);
  const NaiveBayesModel model = LoadModel(flags.model);
  const std::vector<Pattern> all = DiscriminatingPatterns(
      BruteForcePatterns(model, flags.delta), flags.delta);
  Emit(ScatterCsv(model.schema(), all, std::max(flags.k, 1)), flags, out);
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Discrimination patterns and fair learning for naive Bayes",
               "fairnb"};
  app.require_subcommand(1);
  Flags flags;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", flags.out, "Write the result here, not stdout");
  };
  auto add_delta = [&](CLI::App* sub, bool required) {
    auto* opt =
        sub->add_option("--delta", flags.delta, "Discrimination threshold");
    if (required) opt->required();
  };
  auto add_data = [&](CLI::App* sub) {
    sub->add_option("--data", flags.data, "CSV dataset")->required();
    sub->add_option("--schema", flags.schema, "Schema config JSON")->required();
    sub->add_option("--alpha", flags.alpha, "Laplace pseudo-count")
        ->check(CLI::NonNegativeNumber);
  };
  auto add_ranking = [&](CLI::App* sub) {
    sub->add_option("--k", flags.k, "Number of patterns")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--ranking", flags.ranking, "discrimination or divergence")
        ->check(CLI::IsMember({"discrimination", "divergence"}));
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", flags.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* fit = app.add_subcommand("fit", "Fit a naive Bayes model");
  add_data(fit);
  fit->add_option("--model-out", flags.model_out, "Write the model JSON here");
  add_out(fit);

  CLI::App* verify = app.add_subcommand("verify", "Check delta-fairness");
  verify->add_option("--model", flags.model, "Model JSON")->required();
  add_delta(verify, true);
  add_out(verify);

  CLI::App* mine = app.add_subcommand("mine", "Find discrimination patterns");
  mine->add_option("--model", flags.model, "Model JSON")->required();
  add_delta(mine, true);
  add_ranking(mine);
  add_format(mine);
  add_out(mine);

  CLI::App* learn = app.add_subcommand("learn", "Learn a delta-fair model");
  add_data(learn);
  add_delta(learn, true);
  add_ranking(learn);
  learn->add_option("--model-out", flags.model_out,
                    "Write the model JSON here");
  learn
      ->add_option("--max-iterations", flags.max_iterations,
                   "Cutting-plane iteration cap")
      ->check(CLI::PositiveNumber);
  learn->add_flag("--timing", flags.timing, "Include per-iteration seconds");
  learn->add_flag("--trace-remaining", flags.trace_remaining,
                  "Count remaining patterns after each iteration");
  add_out(learn);

  CLI::App* eval = app.add_subcommand("eval", "Likelihood and accuracy table");
  add_data(eval);
  add_delta(eval, false);
  add_ranking(eval);
  eval->add_option("--folds", flags.folds, "Cross-validation folds, 0 to skip");
  eval->add_option("--seed", flags.seed, "Fold assignment seed");
  add_format(eval);
  add_out(eval);

  CLI::App* scatter =
      app.add_subcommand("scatter", "Mass, |Delta| and divergence per pattern");
  scatter->add_option("--model", flags.model, "Model JSON")->required();
  add_delta(scatter, true);
  scatter->add_option("--k", flags.k, "Top-k size for the highlight columns")
      ->check(CLI::NonNegativeNumber);
  add_out(scatter);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    ReportError(err, "usage", e.what(), kExitUsage);
    return kExitUsage;
  }

  try {
    if (fit->parsed()) return RunFit(flags, out);
    if (verify->parsed()) return RunVerify(flags, out);
    if (mine->parsed()) return RunMine(flags, out);
    if (learn->parsed()) return RunLearn(flags, out);
    if (eval->parsed()) {
      return RunEval(flags, eval->count("--delta") > 0, out);
    }
    if (scatter->parsed()) return RunScatter(flags, out);
  } catch (const UsageError& e) {
    ReportError(err, "usage", e.what(), kExitUsage);
    return kExitUsage;
  } catch (const Error& e) {
    const int code = ExitCodeFor(e.code());
    ReportError(err, ErrorCodeName(e.code()), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    ReportError(err, "internal", e.what(), kExitUsage);
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fairnb::cli
