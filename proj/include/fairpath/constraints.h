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

#ifndef FAIRPATH_CONSTRAINTS_H_
#define FAIRPATH_CONSTRAINTS_H_

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fairpath/graph.h"

namespace fairpath {

// Per-color occurrence bounds, a length budget and an optional exact vertex
// count.
struct BoundsSpec {
  std::vector<int> alphas;
  std::vector<int> betas;
  Length ell = 0;
  std::optional<int> k;

  // Throws kDimensionMismatch on size mismatch or negative alpha,
  // kInfeasibleBounds if some alpha exceeds its beta or k lies outside
  // [sum alpha, sum beta].
  static BoundsSpec Create(std::vector<int> alphas, std::vector<int> betas,
                           Length ell = 0, std::optional<int> k = {});
  void Validate() const;

  int num_colors() const { return static_cast<int>(alphas.size()); }
  int alpha_sum() const;

  friend bool operator==(const BoundsSpec&, const BoundsSpec&) = default;
};

// All entries equal.
bool IsBalanceFair(const ColorCounts& counts);

// alpha_i <= counts[i] <= beta_i for every color, and the total equals k when
// the spec pins k. Throws kDimensionMismatch.
bool SatisfiesBounds(const ColorCounts& counts, const BoundsSpec& spec);

enum class SlackMode { kDifference, kQuotient };

// One spec per guessed minimum occurrence alpha: every color gets
// [alpha, alpha + slack] (difference) or [alpha, alpha * slack] (quotient).
// Throws kInvalidSlack for negative slack or quotient slack below 1.
std::vector<BoundsSpec> ExpandMaxMin(int num_colors, int slack,
                                     SlackMode mode,
                                     std::span<const int> guesses);

// One spec per guessed path vertex count k, bounds floor/ceil of the exact
// proportion k * |chi^i| / n widened by `slack`. The spec records k.
std::vector<BoundsSpec> ExpandProportional(std::span<const int> class_sizes,
                                           int slack,
                                           std::span<const int> guesses);
std::vector<BoundsSpec> ExpandProportional(const ColoredDigraph& graph,
                                           int slack,
                                           std::span<const int> guesses);

struct MarginGuess {
  BoundsSpec spec;
  ColorId first;
  ColorId second;
};

// One spec per ordered pair of distinct colors (first, second) and counts
// x >= y from `counts` with x - y <= slack: first is pinned to x, second to
// y, every other color to [0, y].
std::vector<MarginGuess> ExpandMarginOfVictory(int num_colors, int slack,
                                               std::span<const int> counts);

struct BalanceVariant {};
struct ExplicitBoundsVariant {
  BoundsSpec spec;
};
struct MaxMinVariant {
  int slack = 0;
  SlackMode mode = SlackMode::kDifference;
};
struct ProportionalVariant {
  int slack = 0;
};
struct MarginOfVictoryVariant {
  int slack = 0;
};

using FairnessVariant =
    std::variant<BalanceVariant, ExplicitBoundsVariant, MaxMinVariant,
                 ProportionalVariant, MarginOfVictoryVariant>;

// Throws kInvalidSlack on out-of-range slack parameters.
void ValidateVariant(const FairnessVariant& variant);

std::string VariantName(const FairnessVariant& variant);

}  // namespace fairpath

#endif  // FAIRPATH_CONSTRAINTS_H_
