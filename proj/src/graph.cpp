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

#include "netsec/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

#include "netsec/error.hpp"

namespace netsec {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Backtracking state for automorphism search.
struct AutomorphismSearch {
  const Graph& g;
  std::vector<int> image;  // image[v] = phi(v) or -1
  std::vector<char> used;  // used[w] = some v maps to w

  explicit AutomorphismSearch(const Graph& graph)
      : g(graph), image(graph.num_nodes(), -1), used(graph.num_nodes(), 0) {}

  bool consistent(int v, int w) const {
    if (g.degree(v) != g.degree(w)) return false;
    for (int u = 0; u < g.num_nodes(); ++u) {
      if (image[u] < 0) continue;
      if (g.adjacent(u, v) != g.adjacent(image[u], w)) return false;
    }
    return true;
  }

  bool extend(int v) {
    const int n = g.num_nodes();
    if (v == n) return true;
    if (image[v] >= 0) return extend(v + 1);
    for (int w = 0; w < n; ++w) {
      if (used[w] || !consistent(v, w)) continue;
      image[v] = w;
      used[w] = 1;
      if (extend(v + 1)) return true;
      image[v] = -1;
      used[w] = 0;
    }
    return false;
  }
};

}  // namespace

std::string_view to_string(Topology t) {
  switch (t) {
    case Topology::Ring:
      return "ring";
    case Topology::Star:
      return "star";
    case Topology::Complete:
      return "complete";
    case Topology::Custom:
      return "custom";
  }
  return "custom";
}

Topology parse_topology(std::string_view name) {
  if (name == "ring") return Topology::Ring;
  if (name == "star") return Topology::Star;
  if (name == "complete") return Topology::Complete;
  throw InvalidParameter("unknown topology '" + std::string(name) +
                         "' (expected ring, star or complete)");
}

Graph::Graph(int n, const std::vector<Edge>& edges, Topology tag) : n_(n), tag_(tag) {
  if (n < 1) throw InvalidParameter("graph needs at least one node");
  adj_.assign(static_cast<size_t>(n) * n, 0);
  adj_list_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidParameter("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw InvalidParameter("self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (adj_[u * n + v]) continue;
    adj_[u * n + v] = adj_[v * n + u] = 1;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto [u, v] : edges_) {
    adj_list_[u].push_back(v);
    adj_list_[v].push_back(u);
  }
  for (auto& nb : adj_list_) std::sort(nb.begin(), nb.end());

  const int components = count_components(n, edges_);
  if (components != 1) {
    throw DisconnectedGraph("graph is disconnected: " + std::to_string(components) + " components",
                            components);
  }
}

Graph build_topology(Topology kind, int n) {
  std::vector<Edge> edges;
  switch (kind) {
    case Topology::Ring:
      if (n < 3) throw InvalidParameter("ring needs n >= 3");
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case Topology::Star:
      if (n < 2) throw InvalidParameter("star needs n >= 2");
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case Topology::Complete:
      if (n < 2) throw InvalidParameter("complete graph needs n >= 2");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case Topology::Custom:
      throw InvalidParameter("build_topology: Custom has no canonical construction");
  }
  return Graph(n, edges, kind);
}

Graph load_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int max_node = -1;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    int vals[2];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int k = 0; k < 2; ++k) {
      while (p < end && (*p == ' ' || *p == '\t' || *p == ',')) ++p;
      auto [next, ec] = std::from_chars(p, end, vals[k]);
      if (ec != std::errc() || next == p) {
        throw ParseError(line_no, "expected two integers, got '" + std::string(line) + "'");
      }
      p = next;
    }
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p != end) throw ParseError(line_no, "trailing input in '" + std::string(line) + "'");
    if (vals[0] < 0 || vals[1] < 0) throw ParseError(line_no, "negative node index");
    if (vals[0] == vals[1]) {
      throw InvalidParameter("line " + std::to_string(line_no) + ": self-loop at node " +
                             std::to_string(vals[0]));
    }
    edges.emplace_back(vals[0], vals[1]);
    max_node = std::max({max_node, vals[0], vals[1]});
  }
  if (edges.empty()) throw ParseError(line_no, "edge list is empty");
  return Graph(max_node + 1, edges, Topology::Custom);
}

int count_components(int n, const std::vector<Edge>& edges) {
  UnionFind uf(n);
  int components = n;
  for (auto [u, v] : edges) {
    if (uf.unite(u, v)) --components;
  }
  return components;
}

int distance(const Graph& g, int i, int j) {
  const int n = g.num_nodes();
  if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidParameter("distance: node out of range");
  if (i == j) return 0;
  std::vector<int> dist(n, -1);
  std::queue<int> frontier;
  dist[i] = 0;
  frontier.push(i);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int w : g.neighbors(u)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      if (w == j) return dist[w];
      frontier.push(w);
    }
  }
  return -1;  // unreachable: Graph is connected
}

std::optional<std::vector<int>> find_automorphism(const Graph& g, int from, int to) {
  if (g.num_nodes() > kMaxTransitivityNodes) {
    throw SizeLimitExceeded(
        "automorphism search is limited to n <= " + std::to_string(kMaxTransitivityNodes) +
        "; use the topology tag for larger graphs");
  }
  AutomorphismSearch search(g);
  if (!search.consistent(from, to)) return std::nullopt;
  search.image[from] = to;
  search.used[to] = 1;
  if (!search.extend(0)) return std::nullopt;
  return search.image;
}

bool is_vertex_transitive(const Graph& g) {
  if (g.num_nodes() > kMaxTransitivityNodes) {
    throw SizeLimitExceeded(
        "is_vertex_transitive is limited to n <= " + std::to_string(kMaxTransitivityNodes) +
        "; use the topology tag for larger graphs");
  }
  // The automorphism group acts transitively iff the orbit of node 0 is V.
  for (int j = 1; j < g.num_nodes(); ++j) {
    if (!find_automorphism(g, 0, j)) return false;
  }
  return true;
}

bool treat_as_vertex_transitive(const Graph& g) {
  switch (g.topology()) {
    case Topology::Ring:
    case Topology::Complete:
      return true;
    case Topology::Star:
      return g.num_nodes() == 2;
    case Topology::Custom:
      return g.num_nodes() <= kMaxTransitivityNodes && is_vertex_transitive(g);
  }
  return false;
}

}  // namespace netsec
