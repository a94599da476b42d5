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

#ifndef FAIRPATH_GRAPH_IO_H_
#define FAIRPATH_GRAPH_IO_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "fairpath/graph.h"

namespace fairpath {

// Line-oriented colored-graph format, 1-based ids:
//
//   c <comment>
//   p fairpath <n> <m> <c>
//   v <id> <color>          (n lines)
//   a <tail> <head> <len>   (m lines)
//
// The problem line must be the first non-comment line. Parse failures throw
// Error(kParse) naming the offending line; graph validation errors propagate
// from ColoredDigraph::Build.
ColoredDigraph ReadGraph(std::istream& in);
ColoredDigraph ParseGraph(const std::string& text);

// Canonical form: comments first, then `p`, `v` lines by id, `a` lines in
// arc order.
void WriteGraph(std::ostream& out, const ColoredDigraph& graph,
                const std::vector<std::string>& comments = {});
std::string SerializeGraph(const ColoredDigraph& graph,
                           const std::vector<std::string>& comments = {});

// Comment payloads (text after "c ") in file order.
std::vector<std::string> ReadComments(const std::string& text);

}  // namespace fairpath

#endif  // FAIRPATH_GRAPH_IO_H_
