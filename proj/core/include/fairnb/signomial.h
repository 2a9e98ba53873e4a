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

#ifndef FAIRNB_SIGNOMIAL_H_
#define FAIRNB_SIGNOMIAL_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fairnb {

// Sparse exponent vector: (variable index, exponent), sorted by index, no
// zero exponents, no repeated indices.
using Exponents = std::vector<std::pair<int, double>>;

// Sorts, merges repeated indices and drops zeros.
Exponents NormalizeExponents(Exponents e);

// c * prod x_i^{a_i} with c > 0.
class Monomial {
 public:
  Monomial() = default;
  // Throws kInvalidArgument unless coefficient is finite and positive.
  Monomial(double coefficient, Exponents exponents);

  double coefficient() const { return coefficient_; }
  const Exponents& exponents() const { return exponents_; }

  Monomial operator*(const Monomial& other) const;
  Monomial Pow(double power) const;

 private:
  double coefficient_ = 1.0;
  Exponents exponents_;
};

// sum_k c_k prod x_i^{a_ik} with real, nonzero c_k.
class Signomial {
 public:
  struct Term {
    double coefficient;
    Exponents exponents;
  };

  Signomial() = default;
  // Terms with equal exponents are merged; terms that cancel are dropped.
  explicit Signomial(std::vector<Term> terms);

  void Add(double coefficient, const Monomial& m);
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

struct ProgramVariable {
  std::string name;
  std::optional<double> upper;  // optional box; lower bound is always 0
};

// minimize objective
// subject to  inequalities[i](x) <= 1,  equalities[j](x) = 1,  x > 0.
struct SignomialProgram {
  std::vector<ProgramVariable> variables;
  Monomial objective;
  std::vector<Signomial> inequalities;
  std::vector<Monomial> equalities;

  int AddVariable(std::string name, std::optional<double> upper = {});
  // Throws kInvalidSchema if an expression references an undeclared index.
  void Validate() const;
  // One line per expression, terms as coef*var^exp*...
  std::string DebugString() const;
};

// Exact evaluation, each term in log space. Throws kInvalidSchema when an
// exponent references a variable outside `values`, kInvalidArgument on a
// non-positive value.
double Evaluate(const Monomial& m, std::span<const double> values);
double Evaluate(const Signomial& s, std::span<const double> values);

}  // namespace fairnb

#endif  // FAIRNB_SIGNOMIAL_H_
