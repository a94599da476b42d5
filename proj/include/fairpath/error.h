// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRPATH_ERROR_H_
#define FAIRPATH_ERROR_H_

#include <stdexcept>
#include <string>

namespace fairpath {

enum class ErrorCode {
  kZeroOrNegativeLength,
  kColorOutOfRange,
  kDanglingVertexId,
  kParse,
  kDimensionMismatch,
  kInvalidSlack,
  kNeedTwoColors,
  kInfeasibleBounds,
  kEpsilonOutOfRange,
  kSizeMismatch,
  kRankDeficient,
  kCorruptTable,
  kParameterTooSmall,
  kCapExceeded,
  kOverflow,
  kInvalidQuery,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported with this exception type; callers branch
// on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fairpath

#endif  // FAIRPATH_ERROR_H_
