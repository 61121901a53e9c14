// Copyright 2026 The netsec Authors
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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netsec {

enum class Topology { Ring, Star, Complete, Custom };

std::string_view to_string(Topology t);
// Accepts "ring", "star", "complete" (case-sensitive). Throws InvalidParameter.
Topology parse_topology(std::string_view name);

using Edge = std::pair<int, int>;

// Undirected, simple, connected network on agents 0..n-1.
//
// Immutable after construction. Every constructor validates symmetry,
// the absence of self-loops and connectivity, so a Graph value always
// satisfies those invariants. For Star the center is node 0.
class Graph {
 public:
  // Edges may be given in either orientation and may repeat; duplicates
  // collapse. Throws InvalidParameter on self-loops or out-of-range
  // endpoints, DisconnectedGraph if the result is not connected.
  Graph(int n, const std::vector<Edge>& edges, Topology tag = Topology::Custom);

  int num_nodes() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  Topology topology() const { return tag_; }

  // Canonical edge list, u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_list_[v]; }
  bool adjacent(int u, int v) const { return adj_[u * n_ + v] != 0; }
  int degree(int v) const { return static_cast<int>(adj_list_[v].size()); }

 private:
  int n_;
  Topology tag_;
  std::vector<Edge> edges_;
  std::vector<char> adj_;
  std::vector<std::vector<int>> adj_list_;
};

// Ring (n >= 3), Star (n >= 2, center 0) or Complete (n >= 2).
Graph build_topology(Topology kind, int n);

// One "u v" pair of 0-indexed integers per line. Blank lines and lines
// starting with '#' are ignored. The node count is max index + 1.
Graph load_edge_list(std::string_view text);

// Number of connected components of the graph on n nodes with these edges,
// by union-find. Works on arbitrary (possibly disconnected) edge sets.
int count_components(int n, const std::vector<Edge>& edges);

// Shortest-path hop count by breadth-first search.
int distance(const Graph& g, int i, int j);

// Largest n accepted by is_vertex_transitive.
inline constexpr int kMaxTransitivityNodes = 10;

// Exact test by backtracking over adjacency-preserving permutations with
// degree pruning. Throws SizeLimitExceeded above kMaxTransitivityNodes;
// callers with larger graphs should rely on topology().
bool is_vertex_transitive(const Graph& g);

// An automorphism mapping `from` to `to`, if one exists. Same size cap.
std::optional<std::vector<int>> find_automorphism(const Graph& g, int from, int to);

// True for the tagged families known to be vertex-transitive (Ring,
// Complete), for Star with n == 2, and otherwise decided exactly when the
// graph is small enough. Returns false for large Custom graphs.
bool treat_as_vertex_transitive(const Graph& g);

}  // namespace netsec
