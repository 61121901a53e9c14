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

// netsec: command-line front end for the network security game solvers.
//
//   netsec disseminate --topology ring --n 6 --p 0.5 [--method exact|closed|mc]
//   netsec attack --q 0.1,0.2,0.3 --topology complete --p 0.5 --omega 1
//   netsec equilibrium --regime nash-strategic --topology star --n 5 --p 0.5
//   netsec sweep-investments --topology complete --n 5 --p-grid 0:1:101 [--svg f.svg]
//   netsec sweep-documents --n 10 --p-grid 0:1:21
//   netsec crossover --topology ring --n 5
//
// Exit codes: 0 success, 2 invalid arguments, 3 solver non-convergence.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "netsec/attack.hpp"
#include "netsec/dissemination.hpp"
#include "netsec/error.hpp"
#include "netsec/game.hpp"
#include "netsec/graph.hpp"
#include "netsec/reach_kernels.hpp"
#include "netsec/sweep.hpp"
#include "netsec/table.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitNonConvergence = 3;

struct Options {
  std::string topology;
  std::string edges;
  int n = 5;
  double p = 0.5;
  std::string p_grid = "0:1:101";
  double alpha = 1.0;
  double omega = 1.0;
  std::string method = "closed";
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  std::string out;
  std::string svg;
  std::string regime = "nash-strategic";
  std::string q;
  bool numeric = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw netsec::InvalidParameter("cannot open edge file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

netsec::Graph make_graph(const Options& o) {
  if (!o.edges.empty()) return netsec::load_edge_list(read_file(o.edges));
  if (o.topology.empty()) throw netsec::InvalidParameter("give --topology or --edges");
  return netsec::build_topology(netsec::parse_topology(o.topology), o.n);
}

// Ring/star/complete default to the closed form; edge files to enumeration.
netsec::DisseminationMethod method_for(const Options& o, const netsec::Graph& g,
                                       bool method_given) {
  if (!method_given && g.topology() == netsec::Topology::Custom) {
    return netsec::DisseminationMethod::Enumeration;
  }
  return netsec::parse_method(o.method);
}

netsec::SweepSpec make_spec(const Options& o, bool method_given) {
  netsec::SweepSpec spec;
  if (!o.edges.empty()) {
    spec.graph = netsec::load_edge_list(read_file(o.edges));
  } else if (!o.topology.empty()) {
    spec.topology = netsec::parse_topology(o.topology);
  }
  spec.n = o.n;
  spec.grid = netsec::PGrid::parse(o.p_grid);
  spec.alpha = o.alpha;
  spec.omega = o.omega;
  spec.samples = o.samples;
  spec.seed = o.seed;
  spec.numeric = o.numeric;
  if (spec.graph && !method_given) {
    spec.method = netsec::DisseminationMethod::Enumeration;
  } else {
    spec.method = netsec::parse_method(o.method);
  }
  return spec;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw netsec::InvalidParameter("bad number '" + item + "' in --q");
    }
  }
  if (out.empty()) throw netsec::InvalidParameter("--q is empty");
  return out;
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw netsec::InvalidParameter("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_svg(const std::string& path, const netsec::Table& t, const std::string& x,
               std::vector<std::string> ys, const std::string& title) {
  if (path.empty()) return;
  std::ofstream svg(path);
  if (!svg) throw netsec::InvalidParameter("cannot write '" + path + "'");
  netsec::write_svg_chart(svg, t, x, ys, title);
}

int run_disseminate(const Options& o, bool method_given) {
  const netsec::Graph g = make_graph(o);
  const auto d = netsec::disseminate(g, o.p, method_for(o, g, method_given), o.samples, o.seed);
  netsec::Table pairs{{"i", "j", "P_ij"}, {}};
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.size(); ++j) {
      pairs.rows.push_back({static_cast<long long>(i), static_cast<long long>(j), d.P(i, j)});
    }
  }
  netsec::Table docs{{"i", "D_i"}, {}};
  for (int i = 0; i < d.size(); ++i) docs.rows.push_back({static_cast<long long>(i), d.D(i)});
  Output out(o.out);
  netsec::write_csv(out.stream(), pairs);
  netsec::write_csv(out.stream(), docs);
  return 0;
}

int run_attack(const Options& o, bool method_given, bool n_given) {
  const auto levels = parse_list(o.q);
  Options with_n = o;
  if (!n_given) with_n.n = static_cast<int>(levels.size());
  const netsec::Graph g = make_graph(with_n);
  if (g.num_nodes() != static_cast<int>(levels.size())) {
    throw netsec::InvalidParameter("--q has " + std::to_string(levels.size()) +
                                   " entries for a graph with " + std::to_string(g.num_nodes()) +
                                   " nodes");
  }
  const auto d = netsec::disseminate(g, o.p, method_for(o, g, method_given), o.samples, o.seed);
  const netsec::SecurityVector q(Eigen::Map<const Eigen::VectorXd>(levels.data(), levels.size()));
  const auto sol = netsec::optimal_attack(q, d.D, o.omega);

  netsec::Table per_agent{{"i", "a_i", "active"}, {}};
  for (int i = 0; i < q.size(); ++i) {
    per_agent.rows.push_back(
        {static_cast<long long>(i), sol.a(i), static_cast<long long>(sol.is_active(i) ? 1 : 0)});
  }
  netsec::Table summary{{"lambda", "n_star", "payoff"}, {}};
  summary.rows.push_back({sol.lambda, static_cast<long long>(sol.n_star()),
                          netsec::attacker_payoff(sol.a, q, d.D, o.omega)});
  Output out(o.out);
  netsec::write_csv(out.stream(), per_agent);
  netsec::write_csv(out.stream(), summary);
  return 0;
}

int run_equilibrium(const Options& o, bool method_given) {
  const netsec::Graph g = make_graph(o);
  const netsec::Params params(o.p, o.alpha, o.omega);
  const auto d = netsec::disseminate(g, o.p, method_for(o, g, method_given), o.samples, o.seed);
  const netsec::Regime regime = netsec::parse_regime(o.regime);
  const int n = g.num_nodes();
  const bool vt = netsec::treat_as_vertex_transitive(g);

  std::optional<netsec::GameOutcome> outcome;
  switch (regime) {
    case netsec::Regime::NashRandom:
      outcome = netsec::evaluate_outcome(netsec::nash_random(n, o.alpha), d, params, regime);
      break;
    case netsec::Regime::OptRandom:
      outcome =
          netsec::evaluate_outcome(netsec::social_optimum_random(d.D, o.alpha), d, params, regime);
      break;
    case netsec::Regime::NashStrategic:
      if (vt && !o.numeric) {
        outcome = netsec::evaluate_outcome(
            netsec::nash_strategic_vt(d.D.mean(), n, o.alpha, o.omega), d, params, regime);
      } else {
        outcome =
            netsec::best_response_dynamics(g, d, params, netsec::SecurityVector::uniform(n, 0.5));
      }
      break;
    case netsec::Regime::OptStrategic:
      if (vt && !o.numeric) {
        outcome = netsec::evaluate_outcome(
            netsec::social_optimum_strategic_vt(d.D.mean(), n, o.alpha), d, params, regime);
      } else {
        outcome = netsec::social_optimum_numeric(g, d, params);
      }
      break;
  }

  netsec::Table per_agent{{"i", "q_i", "a_i", "reward_i"}, {}};
  for (int i = 0; i < n; ++i) {
    per_agent.rows.push_back(
        {static_cast<long long>(i), outcome->q[i], outcome->attack.a(i), outcome->rewards(i)});
  }
  netsec::Table summary{{"S", "lambda", "n_star"}, {}};
  summary.rows.push_back(
      {outcome->welfare, outcome->attack.lambda, static_cast<long long>(outcome->attack.n_star())});
  Output out(o.out);
  netsec::write_csv(out.stream(), per_agent);
  netsec::write_csv(out.stream(), summary);
  return 0;
}

int run_sweep_investments(const Options& o, bool method_given) {
  const netsec::SweepSpec spec = make_spec(o, method_given);
  const netsec::Table t = netsec::sweep_investments(spec);
  Output out(o.out);
  netsec::write_csv(out.stream(), t);
  std::vector<std::string> ys(t.columns.begin() + 1, t.columns.end());
  write_svg(o.svg, t, "p", ys, "Security investments");
  return 0;
}

int run_sweep_documents(const Options& o, bool method_given) {
  const netsec::SweepSpec spec = make_spec(o, method_given);
  const netsec::Table t = netsec::sweep_documents(spec);
  Output out(o.out);
  netsec::write_csv(out.stream(), t);
  if (!o.svg.empty()) {
    // One curve per topology: reshape to p, D_<topology> using agent 0.
    netsec::Table chart{{"p"}, {}};
    std::vector<std::string> names;
    for (const auto& row : t.rows) {
      const auto& name = std::get<std::string>(row[0]);
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    }
    const size_t per = t.rows.size() / names.size();
    for (const auto& name : names) chart.columns.push_back("D_" + name);
    for (size_t k = 0; k < per; ++k) {
      std::vector<netsec::Cell> row{t.rows[k][2]};
      for (size_t s = 0; s < names.size(); ++s) row.push_back(t.rows[s * per + k][3]);
      chart.rows.push_back(std::move(row));
    }
    write_svg(o.svg, chart, "p", {chart.columns.begin() + 1, chart.columns.end()},
              "Expected documents");
  }
  return 0;
}

int run_crossover(const Options& o, bool method_given) {
  const netsec::SweepSpec spec = make_spec(o, method_given);
  const auto report = netsec::report_crossover(spec);
  Output out(o.out);
  netsec::write_csv(out.stream(), report.to_table());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  netsec::apply_thread_limit_from_env();

  CLI::App app{"Network security game solver"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--topology", o.topology, "ring, star or complete")
        ->check(CLI::IsMember({"ring", "star", "complete"}));
    sub->add_option("--edges", o.edges, "edge-list file, one 'u v' pair per line");
    sub->add_option("--n", o.n, "number of agents");
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "exact, closed or mc")
        ->check(CLI::IsMember({"exact", "closed", "mc"}));
    sub->add_option("--samples", o.samples, "Monte Carlo samples per source");
    sub->add_option("--seed", o.seed, "Monte Carlo seed");
  };
  auto add_costs = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha, "defender cost coefficient (>= 1)");
    sub->add_option("--omega", o.omega, "attacker cost coefficient (>= 1)");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output CSV path"); };
  auto add_sweep = [&](CLI::App* sub) {
    add_graph(sub);
    add_method(sub);
    add_costs(sub);
    add_out(sub);
    sub->add_option("--p-grid", o.p_grid, "start:stop:steps");
    sub->add_flag("--numeric", o.numeric, "use iterative solvers on vertex-transitive graphs");
  };

  auto* dis = app.add_subcommand("disseminate", "reach matrix P and expected documents D");
  add_graph(dis);
  add_method(dis);
  add_out(dis);
  dis->add_option("--p", o.p, "transmission probability");

  auto* att = app.add_subcommand("attack", "optimal attack vector for given investments");
  add_graph(att);
  add_method(att);
  add_out(att);
  att->add_option("--q", o.q, "comma-separated investments")->required();
  att->add_option("--p", o.p, "transmission probability");
  att->add_option("--omega", o.omega, "attacker cost coefficient (>= 1)");

  auto* eq = app.add_subcommand("equilibrium", "equilibrium or optimum investments");
  add_graph(eq);
  add_method(eq);
  add_costs(eq);
  add_out(eq);
  eq->add_option("--p", o.p, "transmission probability");
  eq->add_option("--regime", o.regime, "nash-random, opt-random, nash-strategic, opt-strategic")
      ->check(CLI::IsMember({"nash-random", "opt-random", "nash-strategic", "opt-strategic"}));
  eq->add_flag("--numeric", o.numeric, "use iterative solvers on vertex-transitive graphs");

  auto* swi = app.add_subcommand("sweep-investments", "investments over a p grid");
  add_sweep(swi);
  swi->add_option("--svg", o.svg, "also write an SVG line chart");
  auto* swd = app.add_subcommand("sweep-documents", "expected documents over a p grid");
  add_sweep(swd);
  swd->add_option("--svg", o.svg, "also write an SVG line chart");
  auto* cro = app.add_subcommand("crossover", "over/under-investment crossover report");
  add_sweep(cro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    auto given = [](CLI::App* sub, const char* name) { return sub->count(name) > 0; };
    if (dis->parsed()) return run_disseminate(o, given(dis, "--method"));
    if (att->parsed()) return run_attack(o, given(att, "--method"), given(att, "--n"));
    if (eq->parsed()) return run_equilibrium(o, given(eq, "--method"));
    if (swi->parsed()) return run_sweep_investments(o, given(swi, "--method"));
    if (swd->parsed()) return run_sweep_documents(o, given(swd, "--method"));
    if (cro->parsed()) return run_crossover(o, given(cro, "--method"));
  } catch (const netsec::NonConvergence& e) {
    std::cerr << "netsec: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const netsec::Error& e) {
    std::cerr << "netsec: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
