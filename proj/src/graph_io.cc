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

#include "fairpath/graph_io.h"

#include <sstream>
#include <string>
#include <vector>

#include "fairpath/error.h"

namespace fairpath {
namespace {

[[noreturn]] void Fail(int line_no, const std::string& what) {
  throw Error(ErrorCode::kParse,
              "line " + std::to_string(line_no) + ": " + what);
}

long long ReadInt(std::istringstream& fields, int line_no,
                  const char* name) {
  long long value;
  if (!(fields >> value)) Fail(line_no, std::string("expected ") + name);
  return value;
}

void ExpectEnd(std::istringstream& fields, int line_no) {
  std::string extra;
  if (fields >> extra) Fail(line_no, "trailing token '" + extra + "'");
}

}  // namespace

ColoredDigraph ReadGraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0, c = 0;
  std::vector<ColorId> colors;
  std::vector<char> seen;
  std::vector<Arc> arcs;
  long long vertex_lines = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag == "c") continue;
    if (!have_header) {
      if (tag != "p") Fail(line_no, "expected problem line 'p fairpath'");
      std::string kind;
      if (!(fields >> kind) || kind != "fairpath") {
        Fail(line_no, "problem kind must be 'fairpath'");
      }
      n = ReadInt(fields, line_no, "vertex count");
      m = ReadInt(fields, line_no, "arc count");
      c = ReadInt(fields, line_no, "color count");
      ExpectEnd(fields, line_no);
      if (n < 0 || m < 0 || c < 1) Fail(line_no, "invalid n, m or c");
      colors.assign(n, -1);
      seen.assign(n, 0);
      arcs.reserve(m);
      have_header = true;
      continue;
    }
    if (tag == "p") Fail(line_no, "duplicate problem line");
    if (tag == "v") {
      const long long id = ReadInt(fields, line_no, "vertex id");
      const long long color = ReadInt(fields, line_no, "color");
      ExpectEnd(fields, line_no);
      if (id < 1 || id > n) Fail(line_no, "vertex id out of range");
      if (seen[id - 1]) Fail(line_no, "duplicate vertex " + std::to_string(id));
      if (color < 1 || color > c) {
        throw Error(ErrorCode::kColorOutOfRange,
                    "line " + std::to_string(line_no) + ": color " +
                        std::to_string(color) + " outside [1.." +
                        std::to_string(c) + "]");
      }
      seen[id - 1] = 1;
      colors[id - 1] = static_cast<ColorId>(color - 1);
      ++vertex_lines;
    } else if (tag == "a") {
      const long long tail = ReadInt(fields, line_no, "tail");
      const long long head = ReadInt(fields, line_no, "head");
      const long long length = ReadInt(fields, line_no, "length");
      ExpectEnd(fields, line_no);
      if (tail < 1 || tail > n || head < 1 || head > n) {
        throw Error(ErrorCode::kDanglingVertexId,
                    "line " + std::to_string(line_no) +
                        ": arc endpoint out of range");
      }
      if (length <= 0) {
        throw Error(ErrorCode::kZeroOrNegativeLength,
                    "line " + std::to_string(line_no) +
                        ": arc length must be positive");
      }
      if (static_cast<long long>(arcs.size()) == m) {
        Fail(line_no, "more arc lines than declared");
      }
      arcs.push_back({static_cast<VertexId>(tail - 1),
                      static_cast<VertexId>(head - 1),
                      static_cast<Length>(length)});
    } else {
      Fail(line_no, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) Fail(line_no, "missing problem line");
  if (vertex_lines != n) {
    Fail(line_no, "expected " + std::to_string(n) + " vertex lines, got " +
                      std::to_string(vertex_lines));
  }
  if (static_cast<long long>(arcs.size()) != m) {
    Fail(line_no, "expected " + std::to_string(m) + " arc lines, got " +
                      std::to_string(arcs.size()));
  }
  return ColoredDigraph::Build(static_cast<int>(n), static_cast<int>(c),
                               std::move(arcs), std::move(colors));
}

ColoredDigraph ParseGraph(const std::string& text) {
  std::istringstream in(text);
  return ReadGraph(in);
}

void WriteGraph(std::ostream& out, const ColoredDigraph& graph,
                const std::vector<std::string>& comments) {
  for (const std::string& comment : comments) out << "c " << comment << '\n';
  out << "p fairpath " << graph.num_vertices() << ' ' << graph.num_arcs()
      << ' ' << graph.num_colors() << '\n';
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    out << "v " << v + 1 << ' ' << graph.color(v) + 1 << '\n';
  }
  for (const Arc& a : graph.arcs()) {
    out << "a " << a.tail + 1 << ' ' << a.head + 1 << ' ' << a.length << '\n';
  }
}

std::string SerializeGraph(const ColoredDigraph& graph,
                           const std::vector<std::string>& comments) {
  std::ostringstream out;
  WriteGraph(out, graph, comments);
  return out.str();
}

std::vector<std::string> ReadComments(const std::string& text) {
  std::vector<std::string> comments;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag != "c") continue;
    std::string rest;
    std::getline(fields, rest);
    if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
    comments.push_back(rest);
  }
  return comments;
}

}  // namespace fairpath
