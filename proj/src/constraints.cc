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

#include "fairpath/constraints.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "fairpath/error.h"

namespace fairpath {

BoundsSpec BoundsSpec::Create(std::vector<int> alphas, std::vector<int> betas,
                              Length ell, std::optional<int> k) {
  BoundsSpec spec{std::move(alphas), std::move(betas), ell, k};
  spec.Validate();
  return spec;
}

int BoundsSpec::alpha_sum() const {
  return std::accumulate(alphas.begin(), alphas.end(), 0);
}

void BoundsSpec::Validate() const {
  if (alphas.size() != betas.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "alpha and beta vectors differ in length");
  }
  long long beta_sum = 0;
  for (size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i] < 0) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "negative lower bound for color " + std::to_string(i + 1));
    }
    if (alphas[i] > betas[i]) {
      throw Error(ErrorCode::kInfeasibleBounds,
                  "alpha exceeds beta for color " + std::to_string(i + 1));
    }
    beta_sum += betas[i];
  }
  if (k && (*k < alpha_sum() || *k > beta_sum)) {
    throw Error(ErrorCode::kInfeasibleBounds,
                "vertex count " + std::to_string(*k) +
                    " outside [sum alpha, sum beta]");
  }
}

bool IsBalanceFair(const ColorCounts& counts) {
  return std::adjacent_find(counts.begin(), counts.end(),
                            std::not_equal_to<>()) == counts.end();
}

bool SatisfiesBounds(const ColorCounts& counts, const BoundsSpec& spec) {
  if (counts.size() != spec.alphas.size() ||
      counts.size() != spec.betas.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "counts have " + std::to_string(counts.size()) +
                    " colors, bounds have " +
                    std::to_string(spec.alphas.size()));
  }
  for (size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < spec.alphas[i] || counts[i] > spec.betas[i]) return false;
  }
  if (spec.k) {
    return std::accumulate(counts.begin(), counts.end(), 0) == *spec.k;
  }
  return true;
}

std::vector<BoundsSpec> ExpandMaxMin(int num_colors, int slack,
                                     SlackMode mode,
                                     std::span<const int> guesses) {
  if (slack < 0 || (mode == SlackMode::kQuotient && slack < 1)) {
    throw Error(ErrorCode::kInvalidSlack,
                "max-min slack " + std::to_string(slack) + " is invalid");
  }
  std::vector<BoundsSpec> specs;
  for (int alpha : guesses) {
    if (alpha < 0) continue;
    const int beta =
        mode == SlackMode::kDifference ? alpha + slack : alpha * slack;
    specs.push_back(BoundsSpec::Create(std::vector<int>(num_colors, alpha),
                                       std::vector<int>(num_colors, beta)));
  }
  return specs;
}

std::vector<BoundsSpec> ExpandProportional(std::span<const int> class_sizes,
                                           int slack,
                                           std::span<const int> guesses) {
  if (slack < 0) {
    throw Error(ErrorCode::kInvalidSlack,
                "proportional slack must be nonnegative");
  }
  const long long n =
      std::accumulate(class_sizes.begin(), class_sizes.end(), 0LL);
  if (n == 0) return {};
  std::vector<BoundsSpec> specs;
  for (int k : guesses) {
    if (k < 0) continue;
    BoundsSpec spec;
    spec.k = k;
    for (int size : class_sizes) {
      const long long scaled = static_cast<long long>(k) * size;
      const long long lo = scaled / n;
      const long long hi = (scaled + n - 1) / n;
      spec.alphas.push_back(static_cast<int>(std::max(0LL, lo - slack)));
      spec.betas.push_back(static_cast<int>(hi + slack));
    }
    spec.Validate();
    specs.push_back(std::move(spec));
  }
  return specs;
}

std::vector<BoundsSpec> ExpandProportional(const ColoredDigraph& graph,
                                           int slack,
                                           std::span<const int> guesses) {
  return ExpandProportional(graph.color_class_sizes(), slack, guesses);
}

std::vector<MarginGuess> ExpandMarginOfVictory(int num_colors, int slack,
                                               std::span<const int> counts) {
  if (num_colors < 2) {
    throw Error(ErrorCode::kNeedTwoColors,
                "margin of victory needs at least two colors");
  }
  if (slack < 0) {
    throw Error(ErrorCode::kInvalidSlack,
                "margin-of-victory slack must be nonnegative");
  }
  std::vector<int> values(counts.begin(), counts.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<MarginGuess> out;
  for (ColorId first = 0; first < num_colors; ++first) {
    for (ColorId second = 0; second < num_colors; ++second) {
      if (first == second) continue;
      for (int x : values) {
        for (int y : values) {
          if (y < 0 || y > x || x - y > slack) continue;
          BoundsSpec spec;
          spec.alphas.assign(num_colors, 0);
          spec.betas.assign(num_colors, y);
          spec.alphas[first] = spec.betas[first] = x;
          spec.alphas[second] = spec.betas[second] = y;
          spec.Validate();
          out.push_back({std::move(spec), first, second});
        }
      }
    }
  }
  return out;
}

void ValidateVariant(const FairnessVariant& variant) {
  if (const auto* mm = std::get_if<MaxMinVariant>(&variant)) {
    if (mm->slack < 0 || (mm->mode == SlackMode::kQuotient && mm->slack < 1)) {
      throw Error(ErrorCode::kInvalidSlack, "invalid max-min slack");
    }
  } else if (const auto* pr = std::get_if<ProportionalVariant>(&variant)) {
    if (pr->slack < 0) {
      throw Error(ErrorCode::kInvalidSlack, "invalid proportional slack");
    }
  } else if (const auto* mv = std::get_if<MarginOfVictoryVariant>(&variant)) {
    if (mv->slack < 0) {
      throw Error(ErrorCode::kInvalidSlack, "invalid margin-of-victory slack");
    }
  } else if (const auto* eb = std::get_if<ExplicitBoundsVariant>(&variant)) {
    eb->spec.Validate();
  }
}

std::string VariantName(const FairnessVariant& variant) {
  struct Namer {
    std::string operator()(const BalanceVariant&) const { return "balance"; }
    std::string operator()(const ExplicitBoundsVariant&) const {
      return "bounds";
    }
    std::string operator()(const MaxMinVariant& v) const {
      return "maxmin:" + std::to_string(v.slack) +
             (v.mode == SlackMode::kDifference ? ":difference" : ":quotient");
    }
    std::string operator()(const ProportionalVariant& v) const {
      return "proportional:" + std::to_string(v.slack);
    }
    std::string operator()(const MarginOfVictoryVariant& v) const {
      return "mov:" + std::to_string(v.slack);
    }
  };
  return std::visit(Namer{}, variant);
}

}  // namespace fairpath
