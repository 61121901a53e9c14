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

#include <Eigen/Core>
#include <cstdint>
#include <string_view>
#include <vector>

#include "netsec/attack.hpp"
#include "netsec/dissemination.hpp"
#include "netsec/graph.hpp"
#include "netsec/params.hpp"

namespace netsec {

enum class Regime { NashRandom, OptRandom, NashStrategic, OptStrategic };

std::string_view to_string(Regime r);
// "nash-random", "opt-random", "nash-strategic" or "opt-strategic".
Regime parse_regime(std::string_view name);
inline bool is_strategic(Regime r) {
  return r == Regime::NashStrategic || r == Regime::OptStrategic;
}

// An investment profile with the attack it induces and the resulting
// rewards Pi_i = 1 - Pr{x_i = 1} - (alpha/2) q_i^2 and welfare S = sum Pi_i.
struct GameOutcome {
  SecurityVector q;
  // Random regimes: a = 1/n, every agent active, lambda is NaN.
  AttackSolution attack;
  Eigen::VectorXd rewards;
  double welfare = 0.0;
  Regime regime = Regime::NashRandom;
  int iterations = 0;     // solver iterations (0 for closed forms)
  double residual = 0.0;  // solver stopping residual
};

// Assembles a GameOutcome for q: uniform attack for the random regimes,
// optimal_attack for the strategic ones.
GameOutcome evaluate_outcome(const SecurityVector& q, const Dissemination& diss,
                             const Params& params, Regime regime);

AttackSolution uniform_attack(int n);

// q_i = 1/(alpha n) for every agent, independent of p and topology.
SecurityVector nash_random(int n, double alpha);

// q_i = D_i / (alpha n). Requires D_i <= n.
SecurityVector social_optimum_random(const Eigen::VectorXd& D, double alpha);

// Vertex-transitive strategic social optimum, q_i = D / (alpha n). The vector
// overload throws PreconditionFailed if the D_i differ by more than 1e-9.
double social_optimum_strategic_level(double D, int n, double alpha);
SecurityVector social_optimum_strategic_vt(double D, int n, double alpha);
SecurityVector social_optimum_strategic_vt(const Eigen::VectorXd& D, double alpha);

// Vertex-transitive strategic equilibrium,
//   q_i = ((n-D) D + omega) / ((n-D) D + alpha n omega).
double nash_strategic_level(double D, int n, double alpha, double omega);
SecurityVector nash_strategic_vt(double D, int n, double alpha, double omega);
SecurityVector nash_strategic_vt(const Eigen::VectorXd& D, double alpha, double omega);

// dPi_i/dq_i = a_i - sum_j (d a_j / d q_i)(1-q_j) P(i,j) - alpha q_i under
// the strategic attack at q.
double reward_gradient(int i, const Eigen::VectorXd& q, const Dissemination& diss,
                       const Params& params);

// dS/dq_i = a_i D_i - sum_j (d a_j / d q_i)(1-q_j) D_j - alpha q_i.
Eigen::VectorXd welfare_gradient(const Eigen::VectorXd& q, const Dissemination& diss,
                                 const Params& params);

// S(q) under the strategic attack.
double strategic_welfare(const Eigen::VectorXd& q, const Dissemination& diss, const Params& params);

// Agent i's maximizer of Pi_i(., q_-i) on [0,1]: bisection on the gradient
// sign with Newton steps inside the bracket.
double best_response(int i, const Eigen::VectorXd& q, const Dissemination& diss,
                     const Params& params);

// Cyclic best responses in ascending agent order until a full sweep moves
// no q_i by more than tol. Throws NonConvergence after max_iter sweeps.
GameOutcome best_response_dynamics(const Graph& g, const Dissemination& diss, const Params& params,
                                   const SecurityVector& q0, double tol = 1e-8,
                                   int max_iter = 10000);

struct SocialOptimumOptions {
  double tol = 1e-8;      // projected-gradient infinity norm
  int max_iter = 200000;  // per start
  int random_starts = 5;
  std::uint64_t seed = 20190318;
};

// Projected gradient ascent on S over [0,1]^n from uniform starts at 0.1,
// 0.5 and 0.9 plus seeded random starts; the converged start with the best
// welfare wins. The result is the best local optimum found, not a
// certified global one. Throws NonConvergence if no start converges.
GameOutcome social_optimum_numeric(const Graph& g, const Dissemination& diss, const Params& params,
                                   const SocialOptimumOptions& options = {});

// 2(n-D)D >= (n-2D)(alpha n - 1).
bool strengthen_condition(double D, int n, double alpha);

struct PInterval {
  double lo;
  double hi;
};

// Maximal runs of `grid` (ascending) on which strengthen_condition holds
// for the closed-form D of a Ring or Complete topology.
std::vector<PInterval> strengthen_intervals(Topology kind, int n, double alpha,
                                            const std::vector<double>& grid);

struct Crossover {
  double p_star = 0.0;               // first root of q_NS(p) - q_OS(p)
  std::vector<double> sign_changes;  // every root found on the scan grid
  bool strengthen_holds = false;     // condition held on every scan point
};

// Root of q_NS(p) - q_OS(p) on (0,1) for Ring or Complete by a 1000-point
// scan followed by bisection to `tol`. Throws PreconditionFailed unless
// f(eps) > 0 > f(1 - eps).
Crossover find_crossover_p(Topology kind, int n, double alpha, double omega, double tol = 1e-10);

struct StarUniformStrategy {
  double q_center;
  double q_leaf;
  double welfare;
  bool clamped;  // the formula left [0,1] and was clipped
};

// Investments that equalize (1-q) D across the star, so the attack is
// uniform, with the welfare-optimal leaf level
//   q_leaf = (D2/alpha - D2/D1 + D2^2/D1^2) / (D2^2/D1^2 + n - 1),
//   q_center = 1 - (1-q_leaf) D2/D1.
// Welfare is evaluated at a = 1/n.
StarUniformStrategy star_uniform_strategy(int n, double p, double alpha);

struct StarLambStrategy {
  bool feasible;
  double q_center_min;  // (omega + D1 - D2) / D1
  double q_leaf_min;    // omega / D2
  double welfare_bound;
};

// One leaf left unprotected so that it draws the whole attack. Feasible iff
// the minimal protection levels of the others fit in [0,1].
StarLambStrategy star_lamb_strategy(int n, double p, double alpha, double omega);

}  // namespace netsec
