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

#ifndef FAIRNB_ERROR_H_
#define FAIRNB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fairnb {

enum class ErrorCode {
  kInvalidModel,       // parameters outside (0,1) or columns not normalized
  kInvalidSchema,      // malformed schema or undeclared variable
  kInvalidQuery,       // evidence binds the decision variable
  kInvalidPattern,     // x/y overlap, x empty or non-sensitive
  kDimensionMismatch,  // statistics do not match the schema
  kUndefinedQuery,     // alpha == beta == 0 in the relaxation
  kInvalidInterval,    // l > u
  kDegeneratePattern,  // P(xy) == P(y)
  kCapExceeded,        // brute-force enumeration too large
  kInvalidInit,        // solver init not strictly positive
  kUnsupportedThreshold,
  kMustSmooth,  // zero count where a positive one is required
  kIngestion,
  kInvalidFolds,
  kSolverFailure,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fairnb

#endif  // FAIRNB_ERROR_H_
