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

#include "fairnb/signomial.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fairnb/error.h"

namespace fairnb {
namespace {

double LogTerm(double abs_coefficient, const Exponents& e,
               std::span<const double> values) {
  double acc = std::log(abs_coefficient);
  for (const auto& [var, power] : e) {
    if (var < 0 || var >= static_cast<int>(values.size())) {
      throw Error(
          ErrorCode::kInvalidSchema,
          "expression references undeclared variable " + std::to_string(var));
    }
    const double x = values[var];
    if (!(x > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "variable values must be > 0");
    }
    acc += power * std::log(x);
  }
  return acc;
}

void CheckIndices(const Exponents& e, int n) {
  for (const auto& [var, power] : e) {
    if (var < 0 || var >= n) {
      throw Error(
          ErrorCode::kInvalidSchema,
          "expression references undeclared variable " + std::to_string(var));
    }
  }
}

void WriteTerm(std::ostream& out, double coefficient, const Exponents& e,
               const std::vector<ProgramVariable>& vars) {
  out << coefficient;
  for (const auto& [var, power] : e) {
    out << "*" << vars.at(var).name << "^" << power;
  }
}

}  // namespace

Exponents NormalizeExponents(Exponents e) {
  std::sort(e.begin(), e.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Exponents out;
  for (const auto& [var, power] : e) {
    if (!out.empty() && out.back().first == var) {
      out.back().second += power;
    } else {
      out.emplace_back(var, power);
    }
  }
  std::erase_if(out, [](const auto& p) { return p.second == 0.0; });
  return out;
}

Monomial::Monomial(double coefficient, Exponents exponents)
    : coefficient_(coefficient),
      exponents_(NormalizeExponents(std::move(exponents))) {
  if (!(coefficient > 0.0) || !std::isfinite(coefficient)) {
    throw Error(ErrorCode::kInvalidArgument,
                "monomial coefficient must be finite and positive");
  }
}

Monomial Monomial::operator*(const Monomial& other) const {
  Exponents e = exponents_;
  e.insert(e.end(), other.exponents_.begin(), other.exponents_.end());
  return Monomial(coefficient_ * other.coefficient_, std::move(e));
}

Monomial Monomial::Pow(double power) const {
  Exponents e = exponents_;
  for (auto& p : e) p.second *= power;
  return Monomial(std::pow(coefficient_, power), std::move(e));
}

Signomial::Signomial(std::vector<Term> terms) {
  for (Term& t : terms)
    Add(t.coefficient, Monomial(1.0, std::move(t.exponents)));
}

void Signomial::Add(double coefficient, const Monomial& m) {
  const double c = coefficient * m.coefficient();
  if (!std::isfinite(c)) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite coefficient");
  }
  if (c == 0.0) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->exponents != m.exponents()) continue;
    it->coefficient += c;
    if (it->coefficient == 0.0) terms_.erase(it);
    return;
  }
  terms_.push_back(Term{c, m.exponents()});
}

int SignomialProgram::AddVariable(std::string name,
                                  std::optional<double> upper) {
  variables.push_back(ProgramVariable{std::move(name), upper});
  return static_cast<int>(variables.size()) - 1;
}

void SignomialProgram::Validate() const {
  const int n = static_cast<int>(variables.size());
  CheckIndices(objective.exponents(), n);
  for (const Signomial& s : inequalities) {
    if (s.terms().empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty signomial constraint");
    }
    for (const auto& t : s.terms()) CheckIndices(t.exponents, n);
  }
  for (const Monomial& m : equalities) CheckIndices(m.exponents(), n);
  for (const ProgramVariable& v : variables) {
    if (v.upper && !(*v.upper > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "upper bound of '" + v.name + "' must be positive");
    }
  }
}

std::string SignomialProgram::DebugString() const {
  std::ostringstream out;
  out.precision(17);
  out << "minimize ";
  WriteTerm(out, objective.coefficient(), objective.exponents(), variables);
  out << "\n";
  for (const Signomial& s : inequalities) {
    bool first = true;
    for (const auto& t : s.terms()) {
      if (!first) out << " + ";
      WriteTerm(out, t.coefficient, t.exponents, variables);
      first = false;
    }
    out << " <= 1\n";
  }
  for (const Monomial& m : equalities) {
    WriteTerm(out, m.coefficient(), m.exponents(), variables);
    out << " = 1\n";
  }
  for (const ProgramVariable& v : variables) {
    if (v.upper) out << v.name << " <= " << *v.upper << "\n";
  }
  return out.str();
}

double Evaluate(const Monomial& m, std::span<const double> values) {
  return std::exp(LogTerm(m.coefficient(), m.exponents(), values));
}

double Evaluate(const Signomial& s, std::span<const double> values) {
  double acc = 0.0;
  for (const auto& t : s.terms()) {
    const double mag =
        std::exp(LogTerm(std::abs(t.coefficient), t.exponents, values));
    acc += t.coefficient < 0 ? -mag : mag;
  }
  return acc;
}

}  // namespace fairnb
