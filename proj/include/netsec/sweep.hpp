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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netsec/dissemination.hpp"
#include "netsec/game.hpp"
#include "netsec/graph.hpp"
#include "netsec/table.hpp"

namespace netsec {

// Inclusive grid start..stop with `steps` points.
struct PGrid {
  double start = 0.0;
  double stop = 1.0;
  int steps = 101;

  std::vector<double> values() const;
  // "a:b:steps". Throws InvalidParameter on bad syntax or range.
  static PGrid parse(std::string_view text);
  void validate() const;
};

// A parameter sweep over p for one network.
struct SweepSpec {
  // Either a named topology with n, or a loaded custom graph.
  std::optional<Topology> topology;
  int n = 5;
  std::optional<Graph> graph;

  PGrid grid;
  double alpha = 1.0;
  double omega = 1.0;
  DisseminationMethod method = DisseminationMethod::ClosedForm;
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  // Use the iterative solvers even where closed forms exist.
  bool numeric = false;

  // The network these settings describe. Throws InvalidParameter if neither
  // a topology nor a graph is set.
  Graph build_graph() const;
};

// How agents are grouped when reporting per-class results: one class for
// vertex-transitive graphs, center and leaf for the star, one class per
// agent otherwise.
struct AgentClass {
  std::string name;
  int representative;
};
std::vector<AgentClass> agent_classes(const Graph& g);

// Rows per p with q_NR, q_OR, q_NS, q_OS. Vertex-transitive graphs get one
// column per regime from the closed forms (or the solvers when `numeric`);
// other graphs get one column per regime and agent, q_NS_i and q_OS_i from
// best-response dynamics and projected gradient ascent. Grid points run in
// parallel; rows come out ordered by p.
Table sweep_investments(const SweepSpec& spec);

// Rows (topology, n, p, D_0..D_{n-1}). Without a topology or graph in the
// settings both ring and complete are swept.
Table sweep_documents(const SweepSpec& spec);

struct ClassCrossover {
  std::string name;
  std::vector<double> sign_changes;  // roots of q_NS - q_OS, ascending
};

struct CrossoverReport {
  std::vector<ClassCrossover> classes;
  // Runs of the grid on which 2(n-D)D >= (n-2D)(alpha n - 1); only for
  // vertex-transitive graphs.
  std::vector<PInterval> strengthen;
  // p at which mean D = n/2 (NaN for custom graphs).
  double p_hat;

  Table to_table() const;
};

// Closed-form roots on ring and complete; numeric sign changes on the grid,
// refined by bisection, for star and custom graphs.
CrossoverReport report_crossover(const SweepSpec& spec);

}  // namespace netsec
