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

#ifndef FAIRPATH_TESTS_TEST_GRAPHS_H_
#define FAIRPATH_TESTS_TEST_GRAPHS_H_

#include <initializer_list>
#include <vector>

#include "fairpath/graph.h"

namespace fairpath::testing {

// 0-based arcs and colors.
inline ColoredDigraph MakeGraph(int n, int c, std::vector<Arc> arcs,
                                std::vector<ColorId> colors) {
  return ColoredDigraph::Build(n, c, std::move(arcs), std::move(colors));
}

// Unit-length directed path 0 -> 1 -> ... -> n-1.
inline ColoredDigraph PathGraph(std::vector<ColorId> colors, int c) {
  std::vector<Arc> arcs;
  for (int v = 0; v + 1 < static_cast<int>(colors.size()); ++v) {
    arcs.push_back({v, v + 1, 1});
  }
  const int n = static_cast<int>(colors.size());
  return ColoredDigraph::Build(n, c, std::move(arcs), std::move(colors));
}

}  // namespace fairpath::testing

#endif  // FAIRPATH_TESTS_TEST_GRAPHS_H_
