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

#include "fairpath/error.h"

namespace fairpath {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroOrNegativeLength:
      return "ZeroOrNegativeLength";
    case ErrorCode::kColorOutOfRange:
      return "ColorOutOfRange";
    case ErrorCode::kDanglingVertexId:
      return "DanglingVertexId";
    case ErrorCode::kParse:
      return "ParseError";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kInvalidSlack:
      return "InvalidSlack";
    case ErrorCode::kNeedTwoColors:
      return "NeedTwoColors";
    case ErrorCode::kInfeasibleBounds:
      return "InfeasibleBounds";
    case ErrorCode::kEpsilonOutOfRange:
      return "EpsilonOutOfRange";
    case ErrorCode::kSizeMismatch:
      return "SizeMismatch";
    case ErrorCode::kRankDeficient:
      return "RankDeficient";
    case ErrorCode::kCorruptTable:
      return "CorruptTable";
    case ErrorCode::kParameterTooSmall:
      return "ParameterTooSmall";
    case ErrorCode::kCapExceeded:
      return "CapExceeded";
    case ErrorCode::kOverflow:
      return "Overflow";
    case ErrorCode::kInvalidQuery:
      return "InvalidQuery";
  }
  return "Unknown";
}

}  // namespace fairpath
