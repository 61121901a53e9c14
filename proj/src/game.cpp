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

#include "netsec/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "netsec/error.hpp"

namespace netsec {

namespace {

constexpr double kGradientTolerance = 1e-10;
constexpr double kEqualDTolerance = 1e-9;

void check_vt_documents(const Eigen::VectorXd& D) {
  if (D.size() == 0) throw InvalidParameter("empty D");
  if (D.maxCoeff() - D.minCoeff() > kEqualDTolerance) {
    throw PreconditionFailed("vertex-transitive formula needs equal D entries; they differ by " +
                             std::to_string(D.maxCoeff() - D.minCoeff()));
  }
}

void check_sizes(const Graph& g, const Dissemination& diss, int q_size) {
  if (diss.size() != g.num_nodes() || q_size != g.num_nodes()) {
    throw InvalidParameter("graph, dissemination and q sizes disagree");
  }
}

// Uniform q in [0,1]^n from a seeded engine.
Eigen::VectorXd random_profile(int n, std::mt19937_64& rng) {
  Eigen::VectorXd q(n);
  for (int i = 0; i < n; ++i) q(i) = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return q;
}

Eigen::VectorXd clip_unit(const Eigen::VectorXd& q) { return q.cwiseMax(0.0).cwiseMin(1.0); }

struct AscentResult {
  Eigen::VectorXd q;
  double welfare;
  double residual;
  int iterations;
  bool converged;
};

AscentResult projected_ascent(Eigen::VectorXd q, const Dissemination& diss, const Params& params,
                              const SocialOptimumOptions& options) {
  // Within one active-set region S is quadratic with curvature bounded by
  // 2 max(D)^2 / omega + alpha.
  const double lipschitz =
      2.0 * diss.D.maxCoeff() * diss.D.maxCoeff() / params.omega() + params.alpha();
  const double base_step = 1.0 / lipschitz;

  double welfare = strategic_welfare(q, diss, params);
  double residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it < options.max_iter; ++it) {
    const Eigen::VectorXd grad = welfare_gradient(q, diss, params);
    residual = (clip_unit(q + grad) - q).lpNorm<Eigen::Infinity>();
    if (residual <= options.tol) return {q, welfare, residual, it, true};

    double step = base_step;
    for (;;) {
      const Eigen::VectorXd trial = clip_unit(q + step * grad);
      const double trial_welfare = strategic_welfare(trial, diss, params);
      if (trial_welfare >= welfare - 1e-15 || step < 1e-12) {
        q = trial;
        welfare = trial_welfare;
        break;
      }
      step *= 0.5;
    }
  }
  return {q, welfare, residual, options.max_iter, false};
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::NashRandom:
      return "nash-random";
    case Regime::OptRandom:
      return "opt-random";
    case Regime::NashStrategic:
      return "nash-strategic";
    case Regime::OptStrategic:
      return "opt-strategic";
  }
  return "nash-random";
}

Regime parse_regime(std::string_view name) {
  if (name == "nash-random") return Regime::NashRandom;
  if (name == "opt-random") return Regime::OptRandom;
  if (name == "nash-strategic") return Regime::NashStrategic;
  if (name == "opt-strategic") return Regime::OptStrategic;
  throw InvalidParameter("unknown regime '" + std::string(name) + "'");
}

AttackSolution uniform_attack(int n) {
  AttackSolution sol;
  sol.a = Eigen::VectorXd::Constant(n, 1.0 / n);
  sol.lambda = std::numeric_limits<double>::quiet_NaN();
  sol.active_set.resize(n);
  std::iota(sol.active_set.begin(), sol.active_set.end(), 0);
  return sol;
}

GameOutcome evaluate_outcome(const SecurityVector& q, const Dissemination& diss,
                             const Params& params, Regime regime) {
  if (q.size() != diss.size()) throw InvalidParameter("q and dissemination sizes disagree");
  AttackSolution attack =
      is_strategic(regime) ? optimal_attack(q, diss.D, params.omega()) : uniform_attack(q.size());
  const Eigen::VectorXd breach = breach_probabilities(attack.a, q, diss.P);
  Eigen::VectorXd rewards =
      (1.0 - breach.array() - 0.5 * params.alpha() * q.values().array().square()).matrix();
  const double welfare = rewards.sum();
  return GameOutcome{q, std::move(attack), std::move(rewards), welfare, regime, 0, 0.0};
}

SecurityVector nash_random(int n, double alpha) {
  if (n < 1) throw InvalidParameter("n must be >= 1");
  check_cost_coefficient(alpha, "alpha");
  return SecurityVector::uniform(n, 1.0 / (alpha * n));
}

SecurityVector social_optimum_random(const Eigen::VectorXd& D, double alpha) {
  check_cost_coefficient(alpha, "alpha");
  const int n = static_cast<int>(D.size());
  if (n < 1) throw InvalidParameter("empty D");
  if (D.maxCoeff() > n + kEqualDTolerance) throw InvalidParameter("D_i must not exceed n");
  return SecurityVector(clip_unit(D / (alpha * n)));
}

double social_optimum_strategic_level(double D, int n, double alpha) {
  check_cost_coefficient(alpha, "alpha");
  if (!(D >= 1.0 && D <= n + kEqualDTolerance)) throw InvalidParameter("need 1 <= D <= n");
  return std::min(1.0, D / (alpha * n));
}

SecurityVector social_optimum_strategic_vt(double D, int n, double alpha) {
  return SecurityVector::uniform(n, social_optimum_strategic_level(D, n, alpha));
}

SecurityVector social_optimum_strategic_vt(const Eigen::VectorXd& D, double alpha) {
  check_vt_documents(D);
  return social_optimum_strategic_vt(D.mean(), static_cast<int>(D.size()), alpha);
}

double nash_strategic_level(double D, int n, double alpha, double omega) {
  check_cost_coefficient(alpha, "alpha");
  check_cost_coefficient(omega, "omega");
  if (!(D >= 1.0 && D <= n + kEqualDTolerance)) throw InvalidParameter("need 1 <= D <= n");
  const double shared = (n - D) * D;
  return (shared + omega) / (shared + alpha * n * omega);
}

SecurityVector nash_strategic_vt(double D, int n, double alpha, double omega) {
  return SecurityVector::uniform(n, nash_strategic_level(D, n, alpha, omega));
}

SecurityVector nash_strategic_vt(const Eigen::VectorXd& D, double alpha, double omega) {
  check_vt_documents(D);
  return nash_strategic_vt(D.mean(), static_cast<int>(D.size()), alpha, omega);
}

double reward_gradient(int i, const Eigen::VectorXd& q, const Dissemination& diss,
                       const Params& params) {
  const AttackSolution sol = optimal_attack(SecurityVector(q), diss.D, params.omega());
  const Eigen::MatrixXd S = attack_sensitivity(sol, diss.D, params.omega());
  double spill = 0.0;
  for (int j : sol.active_set) spill += S(i, j) * (1.0 - q(j)) * diss.P(i, j);
  return sol.a(i) - spill - params.alpha() * q(i);
}

Eigen::VectorXd welfare_gradient(const Eigen::VectorXd& q, const Dissemination& diss,
                                 const Params& params) {
  const AttackSolution sol = optimal_attack(SecurityVector(q), diss.D, params.omega());
  const Eigen::MatrixXd S = attack_sensitivity(sol, diss.D, params.omega());
  const Eigen::VectorXd exposure = ((1.0 - q.array()) * diss.D.array()).matrix();
  return (sol.a.array() * diss.D.array()).matrix() - S * exposure - params.alpha() * q;
}

double strategic_welfare(const Eigen::VectorXd& q, const Dissemination& diss,
                         const Params& params) {
  const SecurityVector sv(q);
  const AttackSolution sol = optimal_attack(sv, diss.D, params.omega());
  return q.size() - expected_stolen(sol.a, sv, diss.D) - 0.5 * params.alpha() * q.squaredNorm();
}

double best_response(int i, const Eigen::VectorXd& q_in, const Dissemination& diss,
                     const Params& params) {
  Eigen::VectorXd q = q_in;
  auto grad_at = [&](double x) {
    q(i) = x;
    return reward_gradient(i, q, diss, params);
  };

  const double g_lo = grad_at(0.0);
  if (g_lo <= 0.0) return 0.0;
  const double g_hi = grad_at(1.0);
  if (g_hi >= 0.0) return 1.0;

  double lo = 0.0;
  double hi = 1.0;
  double x = std::clamp(q_in(i), 0.0, 1.0);
  if (x <= lo || x >= hi) x = 0.5;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double g = grad_at(x);
    if (std::abs(g) <= kGradientTolerance) return x;
    (g > 0.0 ? lo : hi) = x;

    // Within one active-set region the gradient is linear in q_i with slope
    // -2 (n*-1) D_i / (omega n*) - alpha.
    const AttackSolution sol = optimal_attack(SecurityVector(q), diss.D, params.omega());
    double slope = -params.alpha();
    if (sol.is_active(i)) {
      const int n_star = sol.n_star();
      slope -= 2.0 * (n_star - 1) * diss.D(i) / (params.omega() * n_star);
    }
    const double newton = x - g / slope;
    x = (newton > lo && newton < hi) ? newton : 0.5 * (lo + hi);
  }
  return x;
}

GameOutcome best_response_dynamics(const Graph& g, const Dissemination& diss, const Params& params,
                                   const SecurityVector& q0, double tol, int max_iter) {
  check_sizes(g, diss, q0.size());
  if (!(tol > 0.0)) throw InvalidParameter("tol must be positive");
  Eigen::VectorXd q = q0.values();
  double moved = std::numeric_limits<double>::infinity();
  for (int sweep = 1; sweep <= max_iter; ++sweep) {
    moved = 0.0;
    for (int i = 0; i < q.size(); ++i) {
      const double next = best_response(i, q, diss, params);
      moved = std::max(moved, std::abs(next - q(i)));
      q(i) = next;
    }
    if (moved <= tol) {
      GameOutcome out = evaluate_outcome(SecurityVector(q), diss, params, Regime::NashStrategic);
      out.iterations = sweep;
      out.residual = moved;
      return out;
    }
  }
  throw NonConvergence("best-response dynamics did not converge in " + std::to_string(max_iter) +
                           " sweeps (last move " + std::to_string(moved) + ")",
                       q, moved, max_iter);
}

GameOutcome social_optimum_numeric(const Graph& g, const Dissemination& diss, const Params& params,
                                   const SocialOptimumOptions& options) {
  const int n = g.num_nodes();
  check_sizes(g, diss, n);
  if (!(options.tol > 0.0)) throw InvalidParameter("tol must be positive");

  std::vector<Eigen::VectorXd> starts;
  for (double level : {0.1, 0.5, 0.9}) starts.push_back(Eigen::VectorXd::Constant(n, level));
  std::mt19937_64 rng(options.seed);
  for (int s = 0; s < options.random_starts; ++s) starts.push_back(random_profile(n, rng));

  std::optional<AscentResult> best;
  std::optional<AscentResult> best_failed;
  for (const auto& start : starts) {
    AscentResult r = projected_ascent(start, diss, params, options);
    auto& slot = r.converged ? best : best_failed;
    if (!slot || r.welfare > slot->welfare) slot = std::move(r);
  }
  if (!best) {
    throw NonConvergence("social optimum: no start converged (best residual " +
                             std::to_string(best_failed->residual) + ")",
                         best_failed->q, best_failed->residual, options.max_iter);
  }
  GameOutcome out = evaluate_outcome(SecurityVector(best->q), diss, params, Regime::OptStrategic);
  out.iterations = best->iterations;
  out.residual = best->residual;
  return out;
}

bool strengthen_condition(double D, int n, double alpha) {
  return 2.0 * (n - D) * D >= (n - 2.0 * D) * (alpha * n - 1.0);
}

std::vector<PInterval> strengthen_intervals(Topology kind, int n, double alpha,
                                            const std::vector<double>& grid) {
  std::vector<PInterval> runs;
  bool open = false;
  for (double p : grid) {
    const double D = documents_closed_form(kind, n, p).mean();
    if (strengthen_condition(D, n, alpha)) {
      if (!open) runs.push_back({p, p});
      runs.back().hi = p;
      open = true;
    } else {
      open = false;
    }
  }
  return runs;
}

Crossover find_crossover_p(Topology kind, int n, double alpha, double omega, double tol) {
  if (kind != Topology::Ring && kind != Topology::Complete) {
    throw Unsupported("closed-form crossover needs a ring or complete topology");
  }
  if (!(tol > 0.0)) throw InvalidParameter("tol must be positive");
  auto gap = [&](double p) {
    const double D = documents_closed_form(kind, n, p)(0);
    return nash_strategic_level(D, n, alpha, omega) - social_optimum_strategic_level(D, n, alpha);
  };

  constexpr double kEps = 1e-6;
  constexpr int kScan = 1000;
  if (!(gap(kEps) > 0.0 && gap(1.0 - kEps) < 0.0)) {
    throw PreconditionFailed("q_NS - q_OS does not change sign from + to - on (0,1)");
  }

  Crossover out;
  out.strengthen_holds = true;
  double prev_p = kEps;
  double prev_f = gap(prev_p);
  for (int k = 1; k <= kScan; ++k) {
    const double p = kEps + (1.0 - 2.0 * kEps) * k / kScan;
    const double f = gap(p);
    const double D = documents_closed_form(kind, n, p)(0);
    if (!strengthen_condition(D, n, alpha)) out.strengthen_holds = false;
    if ((prev_f > 0.0) != (f > 0.0)) {
      double lo = prev_p;
      double hi = p;
      const bool lo_positive = prev_f > 0.0;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        ((gap(mid) > 0.0) == lo_positive ? lo : hi) = mid;
      }
      out.sign_changes.push_back(0.5 * (lo + hi));
    }
    prev_p = p;
    prev_f = f;
  }
  out.p_star = out.sign_changes.front();
  return out;
}

StarUniformStrategy star_uniform_strategy(int n, double p, double alpha) {
  if (n < 3) throw InvalidParameter("star_uniform_strategy needs n >= 3");
  check_probability(p);
  check_cost_coefficient(alpha, "alpha");
  const double d1 = star_center_documents(n, p);
  const double d2 = star_leaf_documents(n, p);
  const double ratio = d2 / d1;
  double q_leaf = (d2 / alpha - ratio + ratio * ratio) / (ratio * ratio + n - 1);
  double q_center = 1.0 - (1.0 - q_leaf) * ratio;
  const bool clamped = q_leaf < 0.0 || q_leaf > 1.0 || q_center < 0.0 || q_center > 1.0;
  q_leaf = std::clamp(q_leaf, 0.0, 1.0);
  q_center = std::clamp(q_center, 0.0, 1.0);

  const double stolen = ((1.0 - q_center) * d1 + (n - 1) * (1.0 - q_leaf) * d2) / n;
  const double cost = 0.5 * alpha * (q_center * q_center + (n - 1) * q_leaf * q_leaf);
  return {q_center, q_leaf, n - stolen - cost, clamped};
}

StarLambStrategy star_lamb_strategy(int n, double p, double alpha, double omega) {
  if (n < 3) throw InvalidParameter("star_lamb_strategy needs n >= 3");
  check_probability(p);
  check_cost_coefficient(alpha, "alpha");
  check_cost_coefficient(omega, "omega");
  const double d1 = star_center_documents(n, p);
  const double d2 = star_leaf_documents(n, p);
  const double q_leaf_min = omega / d2;
  const double q_center_min = (omega + d1 - d2) / d1;
  const bool feasible = q_leaf_min <= 1.0 && q_center_min >= 0.0 && q_center_min <= 1.0;
  const double center_term = 1.0 - d2 / d1 + omega / d1;
  const double bound =
      n - d2 - 0.5 * alpha * (center_term * center_term + (n - 2) * omega * omega / (d2 * d2));
  return {feasible, q_center_min, q_leaf_min, bound};
}

}  // namespace netsec
