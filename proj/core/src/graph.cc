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

#include "regmax/graph.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "regmax/errors.h"
#include "regmax/random.h"

namespace regmax {
namespace {

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool ParseLong(std::string_view token, long long& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool ParseDouble(std::string_view token, double& out) {
  std::string copy(token);
  char* end = nullptr;
  out = std::strtod(copy.c_str(), &end);
  return end == copy.c_str() + copy.size() && !copy.empty();
}

void BuildCsr(std::size_t n, const std::vector<Edge>& edges, bool by_source,
              std::vector<std::size_t>& begin, std::vector<Arc>& arcs) {
  begin.assign(n + 1, 0);
  for (const Edge& e : edges) ++begin[(by_source ? e.from : e.to) + 1];
  for (std::size_t v = 0; v < n; ++v) begin[v + 1] += begin[v];
  arcs.resize(edges.size());
  std::vector<std::size_t> fill(begin.begin(), begin.end() - 1);
  for (const Edge& e : edges) {
    const int key = by_source ? e.from : e.to;
    arcs[fill[key]++] = Arc{by_source ? e.to : e.from, e.p};
  }
}

}  // namespace

Digraph::Digraph(std::size_t n, const std::vector<Edge>& edges) : n_(n) {
  for (const Edge& e : edges) {
    if (e.from < 0 || e.to < 0 || static_cast<std::size_t>(e.from) >= n ||
        static_cast<std::size_t>(e.to) >= n) {
      throw std::invalid_argument("edge endpoint outside 0.." +
                                  std::to_string(n) + ")");
    }
    if (!(e.p >= 0.0 && e.p <= 1.0)) {
      throw std::invalid_argument("edge probability outside [0, 1]");
    }
  }
  BuildCsr(n, edges, true, out_begin_, out_arcs_);
  BuildCsr(n, edges, false, in_begin_, in_arcs_);
}

std::vector<Edge> Digraph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (std::size_t u = 0; u < n_; ++u) {
    for (const Arc& a : OutArcs(static_cast<int>(u))) {
      out.push_back(Edge{static_cast<int>(u), a.node, a.p});
    }
  }
  return out;
}

Digraph ParseEdgeList(std::istream& in, const std::string& source) {
  static const std::regex kSnapHeader(
      R"(#\s*Nodes:\s*(\d+)\s+Edges:\s*(\d+))");
  std::vector<Edge> edges;
  long long declared_n = -1;
  std::size_t declared_line = 0;
  long long snap_nodes = -1, snap_edges = -1;
  long long max_id = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      std::smatch m;
      const std::string comment(view.substr(hash));
      if (std::regex_search(comment, m, kSnapHeader)) {
        snap_nodes = std::stoll(m[1]);
        snap_edges = std::stoll(m[2]);
      }
      view = view.substr(0, hash);
    }
    const auto tokens = Tokenize(view);
    if (tokens.empty()) continue;
    if (tokens[0] == "n") {
      long long count = 0;
      if (tokens.size() != 2 || !ParseLong(tokens[1], count) || count < 0) {
        throw ParseError(source, line_no, "header must be 'n <count>'");
      }
      if (declared_n >= 0) throw ParseError(source, line_no, "duplicate 'n' header");
      declared_n = count;
      declared_line = line_no;
      continue;
    }
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError(source, line_no, "expected 'u v [p]'");
    }
    long long u = 0, v = 0;
    if (!ParseLong(tokens[0], u) || !ParseLong(tokens[1], v) || u < 0 || v < 0 ||
        u > std::numeric_limits<int>::max() || v > std::numeric_limits<int>::max()) {
      throw ParseError(source, line_no, "node ids must be non-negative integers");
    }
    double p = std::numeric_limits<double>::quiet_NaN();
    if (tokens.size() == 3 && (!ParseDouble(tokens[2], p) || !(p >= 0.0 && p <= 1.0))) {
      throw ParseError(source, line_no, "edge probability must be a number in [0, 1]");
    }
    if (declared_n >= 0 && (u >= declared_n || v >= declared_n)) {
      throw ParseError(source, line_no,
                       "node id exceeds declared count n=" + std::to_string(declared_n));
    }
    max_id = std::max({max_id, u, v});
    edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v), p});
  }

  std::size_t n = 0;
  if (declared_n >= 0) {
    if (max_id >= declared_n) {
      throw ParseError(source, declared_line, "declared n smaller than largest node id");
    }
    n = static_cast<std::size_t>(declared_n);
  } else if (snap_nodes >= 0) {
    if (max_id >= snap_nodes) {
      throw ParseError(source, 0, "node id exceeds declared node count " +
                                      std::to_string(snap_nodes));
    }
    n = static_cast<std::size_t>(snap_nodes);
  } else {
    n = static_cast<std::size_t>(max_id + 1);
  }
  if (n == 0) throw ParseError(source, 0, "empty instance");
  if (snap_edges >= 0 && static_cast<std::size_t>(snap_edges) != edges.size()) {
    throw ParseError(source, 0,
                     "edge count mismatch: header declares " +
                         std::to_string(snap_edges) + ", file has " +
                         std::to_string(edges.size()));
  }

  std::vector<std::size_t> in_degree(n, 0);
  for (const Edge& e : edges) ++in_degree[e.to];
  for (Edge& e : edges) {
    if (std::isnan(e.p)) e.p = 1.0 / static_cast<double>(in_degree[e.to]);
  }
  return Digraph(n, edges);
}

Digraph LoadEdgeList(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return ParseEdgeList(in, path);
}

void WriteEdgeList(std::ostream& out, const Digraph& g, bool with_p) {
  out << "n " << g.num_nodes() << "\n";
  for (const Edge& e : g.Edges()) {
    out << e.from << ' ' << e.to;
    if (with_p) {
      char buf[32];
      const auto res = std::to_chars(buf, buf + sizeof(buf), e.p);
      out << ' ' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
    }
    out << "\n";
  }
}

std::vector<double> LoadNodeWeights(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::vector<double> weights(n, 1.0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    const auto tokens = Tokenize(view);
    if (tokens.empty()) continue;
    long long v = 0;
    double w = 0.0;
    if (tokens.size() != 2 || !ParseLong(tokens[0], v) || !ParseDouble(tokens[1], w)) {
      throw ParseError(path, line_no, "expected 'v w'");
    }
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw ParseError(path, line_no, "node id outside graph");
    }
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ParseError(path, line_no, "weight must be finite and non-negative");
    }
    weights[static_cast<std::size_t>(v)] = w;
  }
  return weights;
}

Digraph GenerateRandomDigraph(std::size_t n, std::size_t edges,
                              std::uint64_t seed) {
  if (n < 2 && edges > 0) throw std::invalid_argument("need at least 2 nodes");
  const std::size_t max_edges = n * (n - 1);
  if (edges > max_edges) throw std::invalid_argument("too many edges requested");
  Rng rng(seed);
  std::set<std::pair<int, int>> seen;
  std::vector<Edge> list;
  list.reserve(edges);
  while (list.size() < edges) {
    const auto u = static_cast<int>(rng.Index(n));
    const auto v = static_cast<int>(rng.Index(n));
    if (u == v || !seen.emplace(u, v).second) continue;
    list.push_back(Edge{u, v, 0.0});
  }
  std::vector<std::size_t> in_degree(n, 0);
  for (const Edge& e : list) ++in_degree[e.to];
  for (Edge& e : list) e.p = 1.0 / static_cast<double>(in_degree[e.to]);
  return Digraph(n, list);
}

}  // namespace regmax
