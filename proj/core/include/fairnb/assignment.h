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

#ifndef FAIRNB_ASSIGNMENT_H_
#define FAIRNB_ASSIGNMENT_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace fairnb {

using VarIndex = int;
using ValueIndex = int;

struct Binding {
  VarIndex var = 0;
  ValueIndex value = 0;

  friend auto operator<=>(const Binding&, const Binding&) = default;
};

// A partial joint assignment: bindings kept sorted by variable index so
// that equal assignments compare equal and iterate in a canonical order.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<Binding> bindings);

  // Throws kInvalidArgument if `var` is already bound.
  void Bind(VarIndex var, ValueIndex value);
  // Returns a copy with one more binding.
  Assignment With(VarIndex var, ValueIndex value) const;
  void Unbind(VarIndex var);

  bool Contains(VarIndex var) const;
  std::optional<ValueIndex> ValueOf(VarIndex var) const;
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }

  std::span<const Binding> bindings() const { return bindings_; }
  auto begin() const { return bindings_.begin(); }
  auto end() const { return bindings_.end(); }

  bool SharesVariableWith(const Assignment& other) const;
  // Union of two variable-disjoint assignments.
  static Assignment Union(const Assignment& a, const Assignment& b);

  friend auto operator<=>(const Assignment&, const Assignment&) = default;
  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Binding> bindings_;
};

enum class Direction { kMin, kMax };

}  // namespace fairnb

#endif  // FAIRNB_ASSIGNMENT_H_
