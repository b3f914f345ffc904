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

#ifndef REGMAX_GRAPH_H_
#define REGMAX_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace regmax {

struct Edge {
  int from = 0;
  int to = 0;
  double p = 1.0;  // activation probability, in [0, 1]
};

struct Arc {
  int node = 0;  // the other endpoint
  double p = 1.0;
};

// Directed graph over dense node ids 0..n-1 in CSR form, with per-edge
// activation probabilities. Immutable after construction.
class Digraph {
 public:
  Digraph() = default;
  // Throws std::invalid_argument on out-of-range ids or p outside [0, 1].
  Digraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t num_nodes() const { return n_; }
  std::size_t num_edges() const { return out_arcs_.size(); }

  std::span<const Arc> OutArcs(int v) const {
    return {out_arcs_.data() + out_begin_[v], out_arcs_.data() + out_begin_[v + 1]};
  }
  std::span<const Arc> InArcs(int v) const {
    return {in_arcs_.data() + in_begin_[v], in_arcs_.data() + in_begin_[v + 1]};
  }
  std::size_t OutDegree(int v) const { return out_begin_[v + 1] - out_begin_[v]; }
  std::size_t InDegree(int v) const { return in_begin_[v + 1] - in_begin_[v]; }

  std::vector<Edge> Edges() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> out_begin_{0};
  std::vector<Arc> out_arcs_;
  std::vector<std::size_t> in_begin_{0};
  std::vector<Arc> in_arcs_;
};

// Edge-list text format: one "u v [p]" edge per line, whitespace separated,
// '#' starts a comment. An optional header line "n <count>" declares the node
// count; otherwise it is max id + 1. A SNAP-style "# Nodes: N Edges: M"
// comment is checked against the parsed counts. Edges without p get the
// weighted-cascade default 1 / in-degree(v).
//
// Throws ParseError naming the source and line on malformed lines, ids
// outside a declared count, count mismatches, and empty instances.
Digraph ParseEdgeList(std::istream& in, const std::string& source);
Digraph LoadEdgeList(const std::string& path);
void WriteEdgeList(std::ostream& out, const Digraph& g, bool with_p);

// Optional node-weight file: one "v w" pair per line, '#' comments. Nodes
// not listed keep weight 1.
std::vector<double> LoadNodeWeights(const std::string& path, std::size_t n);

// Directed graph with `edges` distinct random arcs (no self loops); edge
// probabilities follow the weighted-cascade default.
Digraph GenerateRandomDigraph(std::size_t n, std::size_t edges,
                              std::uint64_t seed);

}  // namespace regmax

#endif  // REGMAX_GRAPH_H_
