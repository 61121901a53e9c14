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

#include "netsec/sweep.hpp"

#include <charconv>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>

#include "netsec/error.hpp"
#include "netsec/params.hpp"

namespace netsec {

namespace {

struct Investments {
  Eigen::VectorXd nash_random;
  Eigen::VectorXd opt_random;
  Eigen::VectorXd nash_strategic;
  Eigen::VectorXd opt_strategic;
};

Investments investments_at(const Graph& g, double p, const SweepSpec& spec, bool vt) {
  const int n = g.num_nodes();
  const Params params(p, spec.alpha, spec.omega);
  const Dissemination diss = disseminate(g, p, spec.method, spec.samples, spec.seed);
  Investments out;
  out.nash_random = nash_random(n, spec.alpha).values();
  out.opt_random = social_optimum_random(diss.D, spec.alpha).values();
  if (vt && !spec.numeric) {
    // Equal in exact arithmetic; the mean absorbs Monte Carlo noise.
    const double D = diss.D.mean();
    out.nash_strategic = nash_strategic_vt(D, n, spec.alpha, spec.omega).values();
    out.opt_strategic = social_optimum_strategic_vt(D, n, spec.alpha).values();
  } else {
    out.nash_strategic =
        best_response_dynamics(g, diss, params, SecurityVector::uniform(n, 0.5)).q.values();
    out.opt_strategic = social_optimum_numeric(g, diss, params).q.values();
  }
  return out;
}

// Runs `body(k)` for k in [0, count) across OpenMP threads and rethrows the
// first exception (by index) on the calling thread.
template <typename Body>
void parallel_for(int count, Body body) {
  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    try {
      body(k);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<double> roots_by_bisection(const std::vector<double>& grid,
                                       const std::vector<double>& values,
                                       const std::function<double(double)>& f, double tol) {
  std::vector<double> roots;
  for (size_t k = 1; k < grid.size(); ++k) {
    const bool left_positive = values[k - 1] > 0.0;
    if (left_positive == (values[k] > 0.0)) continue;
    double lo = grid[k - 1];
    double hi = grid[k];
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      ((f(mid) > 0.0) == left_positive ? lo : hi) = mid;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

}  // namespace

std::vector<double> PGrid::values() const {
  validate();
  std::vector<double> v(steps);
  for (int k = 0; k < steps; ++k) {
    v[k] = k == steps - 1 ? stop : start + (stop - start) * k / (steps - 1);
  }
  return v;
}

void PGrid::validate() const {
  if (steps < 2) throw InvalidParameter("p grid needs at least 2 steps");
  check_probability(start, "grid start");
  check_probability(stop, "grid stop");
  if (!(start < stop)) throw InvalidParameter("p grid needs start < stop");
}

PGrid PGrid::parse(std::string_view text) {
  PGrid g;
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw InvalidParameter("p grid must look like start:stop:steps, got '" + std::string(text) +
                           "'");
  }
  auto parse_double = [&](std::string_view s) {
    try {
      size_t used = 0;
      const double v = std::stod(std::string(s), &used);
      if (used != s.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw InvalidParameter("bad number '" + std::string(s) + "' in p grid");
    }
  };
  g.start = parse_double(text.substr(0, c1));
  g.stop = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
  const auto steps_text = text.substr(c2 + 1);
  auto [ptr, ec] =
      std::from_chars(steps_text.data(), steps_text.data() + steps_text.size(), g.steps);
  if (ec != std::errc() || ptr != steps_text.data() + steps_text.size()) {
    throw InvalidParameter("bad step count in p grid");
  }
  g.validate();
  return g;
}

Graph SweepSpec::build_graph() const {
  if (graph) return *graph;
  if (topology) return build_topology(*topology, n);
  throw InvalidParameter("sweep needs a topology or an edge list");
}

std::vector<AgentClass> agent_classes(const Graph& g) {
  if (treat_as_vertex_transitive(g)) return {{"all", 0}};
  if (g.topology() == Topology::Star) return {{"center", 0}, {"leaf", 1}};
  std::vector<AgentClass> out;
  for (int i = 0; i < g.num_nodes(); ++i) out.push_back({"agent" + std::to_string(i), i});
  return out;
}

Table sweep_investments(const SweepSpec& spec) {
  const Graph g = spec.build_graph();
  const int n = g.num_nodes();
  const bool vt = treat_as_vertex_transitive(g);
  const auto grid = spec.grid.values();

  std::vector<Investments> results(grid.size());
  parallel_for(static_cast<int>(grid.size()),
               [&](int k) { results[k] = investments_at(g, grid[k], spec, vt); });

  Table table;
  table.columns.push_back("p");
  const char* const regimes[] = {"q_NR", "q_OR", "q_NS", "q_OS"};
  for (const char* r : regimes) {
    if (vt) {
      table.columns.emplace_back(r);
    } else {
      for (int i = 0; i < n; ++i) table.columns.push_back(std::string(r) + "_" + std::to_string(i));
    }
  }
  for (size_t k = 0; k < grid.size(); ++k) {
    std::vector<Cell> row{grid[k]};
    const Investments& inv = results[k];
    for (const Eigen::VectorXd* q :
         {&inv.nash_random, &inv.opt_random, &inv.nash_strategic, &inv.opt_strategic}) {
      if (vt) {
        row.emplace_back(q->mean());
      } else {
        for (int i = 0; i < n; ++i) row.emplace_back((*q)(i));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table sweep_documents(const SweepSpec& spec) {
  std::vector<Graph> graphs;
  if (spec.graph || spec.topology) {
    graphs.push_back(spec.build_graph());
  } else {
    graphs.push_back(build_topology(Topology::Ring, spec.n));
    graphs.push_back(build_topology(Topology::Complete, spec.n));
  }
  const auto grid = spec.grid.values();
  const int n = graphs.front().num_nodes();

  Table table;
  table.columns = {"topology", "n", "p"};
  for (int i = 0; i < n; ++i) table.columns.push_back("D_" + std::to_string(i));

  for (const Graph& g : graphs) {
    std::vector<Eigen::VectorXd> docs(grid.size());
    parallel_for(static_cast<int>(grid.size()), [&](int k) {
      docs[k] = disseminate(g, grid[k], spec.method, spec.samples, spec.seed).D;
    });
    for (size_t k = 0; k < grid.size(); ++k) {
      std::vector<Cell> row{std::string(to_string(g.topology())),
                            static_cast<long long>(g.num_nodes()), grid[k]};
      for (int i = 0; i < n; ++i) row.emplace_back(docs[k](i));
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

CrossoverReport report_crossover(const SweepSpec& spec) {
  const Graph g = spec.build_graph();
  const int n = g.num_nodes();
  const bool vt = treat_as_vertex_transitive(g);
  const auto grid = spec.grid.values();

  CrossoverReport report;
  report.p_hat = g.topology() == Topology::Custom ? std::numeric_limits<double>::quiet_NaN()
                                                  : find_p_for_half_n(g);

  if (vt && (g.topology() == Topology::Ring || g.topology() == Topology::Complete)) {
    const Crossover c = find_crossover_p(g.topology(), n, spec.alpha, spec.omega);
    report.classes.push_back({"all", c.sign_changes});
    report.strengthen = strengthen_intervals(g.topology(), n, spec.alpha, grid);
    return report;
  }

  std::vector<Investments> results(grid.size());
  parallel_for(static_cast<int>(grid.size()),
               [&](int k) { results[k] = investments_at(g, grid[k], spec, false); });

  for (const AgentClass& cls : agent_classes(g)) {
    const int r = cls.representative;
    std::vector<double> gaps(grid.size());
    for (size_t k = 0; k < grid.size(); ++k) {
      gaps[k] = results[k].nash_strategic(r) - results[k].opt_strategic(r);
    }
    auto gap_at = [&](double p) {
      const Investments inv = investments_at(g, p, spec, false);
      return inv.nash_strategic(r) - inv.opt_strategic(r);
    };
    report.classes.push_back({cls.name, roots_by_bisection(grid, gaps, gap_at, 1e-6)});
  }
  return report;
}

Table CrossoverReport::to_table() const {
  Table t;
  t.columns = {"quantity", "class", "value"};
  for (const auto& c : classes) {
    if (c.sign_changes.empty()) {
      t.rows.push_back({std::string("p_star"), c.name, std::numeric_limits<double>::quiet_NaN()});
    }
    for (double root : c.sign_changes) t.rows.push_back({std::string("p_star"), c.name, root});
  }
  for (const auto& run : strengthen) {
    t.rows.push_back({std::string("strengthen_lo"), std::string("all"), run.lo});
    t.rows.push_back({std::string("strengthen_hi"), std::string("all"), run.hi});
  }
  t.rows.push_back({std::string("p_hat"), std::string("all"), p_hat});
  return t;
}

}  // namespace netsec
