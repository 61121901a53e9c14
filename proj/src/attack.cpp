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

#include "netsec/attack.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "netsec/dissemination.hpp"
#include "netsec/error.hpp"
#include "netsec/params.hpp"

namespace netsec {

namespace {

constexpr double kActiveTolerance = 1e-12;
constexpr double kSimplexTolerance = 1e-9;

void check_inputs(const SecurityVector& q, const Eigen::VectorXd& D, double omega) {
  check_cost_coefficient(omega, "omega");
  if (q.size() != D.size() || q.size() == 0) {
    throw InvalidParameter("q and D must be non-empty and of equal length");
  }
  if (!(D.minCoeff() >= 1.0)) throw InvalidParameter("every D_i must be >= 1");
}

// Indices sorted by v descending, ties by index.
std::vector<int> descending_order(const Eigen::VectorXd& v) {
  std::vector<int> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return v(x) > v(y); });
  return order;
}

Eigen::VectorXd exposure(const SecurityVector& q, const Eigen::VectorXd& D) {
  return ((1.0 - q.values().array()) * D.array()).matrix();
}

}  // namespace

bool AttackSolution::is_active(int i) const {
  return std::binary_search(active_set.begin(), active_set.end(), i);
}

SecurityVector::SecurityVector(Eigen::VectorXd q) : q_(std::move(q)) {
  for (int i = 0; i < q_.size(); ++i) {
    if (!(q_(i) >= 0.0 && q_(i) <= 1.0)) {
      throw InvalidParameter("security level q_" + std::to_string(i) + " = " +
                             std::to_string(q_(i)) + " outside [0,1]");
    }
  }
}

SecurityVector SecurityVector::uniform(int n, double level) {
  return SecurityVector(Eigen::VectorXd::Constant(n, level));
}

AttackSolution optimal_attack(const SecurityVector& q, const Eigen::VectorXd& D, double omega) {
  check_inputs(q, D, omega);
  const int n = q.size();
  const Eigen::VectorXd v = exposure(q, D);
  const auto order = descending_order(v);

  // Work with offsets d = v - max(v) so equal exposures cancel exactly and
  // a uniform profile yields a_i = 1/n with no rounding.
  const double top = v(order[0]);
  auto offset = [&](int k) { return v(order[k]) - top; };

  // k = 1 is always admissible: v_(1) + lambda_1 = omega > 0.
  int active = 1;
  double offset_sum = 0.0;
  for (int k = 2; k <= n; ++k) {
    const double sum_k = offset_sum + offset(k - 1);
    if (offset(k - 1) + (omega - sum_k) / k > kActiveTolerance) {
      active = k;
      offset_sum = sum_k;
    } else {
      break;
    }
  }

  AttackSolution sol;
  const double mean_offset = offset_sum / active;
  sol.lambda = omega / active - top - mean_offset;
  sol.a = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < active; ++k) {
    const int i = order[k];
    sol.a(i) = 1.0 / active + (offset(k) - mean_offset) / omega;
    sol.active_set.push_back(i);
  }
  std::sort(sol.active_set.begin(), sol.active_set.end());
  return sol;
}

int count_admissible_active_sizes(const SecurityVector& q, const Eigen::VectorXd& D, double omega) {
  check_inputs(q, D, omega);
  const int n = q.size();
  const Eigen::VectorXd v = exposure(q, D);
  const auto order = descending_order(v);
  int count = 0;
  double top_sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    top_sum += v(order[k - 1]);
    const double lambda_k = (omega - top_sum) / k;
    const bool inside = v(order[k - 1]) + lambda_k > 0.0;
    const bool next_out = k == n || v(order[k]) + lambda_k <= 0.0;
    if (inside && next_out) ++count;
  }
  return count;
}

double kkt_residual(const AttackSolution& sol, const SecurityVector& q, const Eigen::VectorXd& D,
                    double omega) {
  const Eigen::VectorXd v = exposure(q, D);
  double worst = 0.0;
  for (int i = 0; i < v.size(); ++i) {
    const double r = sol.is_active(i) ? std::abs(v(i) - omega * sol.a(i) + sol.lambda)
                                      : std::max(0.0, v(i) + sol.lambda);
    worst = std::max(worst, r);
  }
  return worst;
}

Eigen::MatrixXd attack_sensitivity(const AttackSolution& sol, const Eigen::VectorXd& D,
                                   double omega) {
  const int n = static_cast<int>(D.size());
  const int n_star = sol.n_star();
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
  for (int i : sol.active_set) {
    const double cross = D(i) / (omega * n_star);
    for (int j : sol.active_set) S(i, j) = cross;
    S(i, i) = -(n_star - 1) * cross;
  }
  return S;
}

double breach_probability(int i, const Eigen::VectorXd& a, const SecurityVector& q,
                          const Eigen::MatrixXd& P) {
  double total = 0.0;
  for (int j = 0; j < a.size(); ++j) total += a(j) * (1.0 - q[j]) * P(i, j);
  return total;
}

Eigen::VectorXd breach_probabilities(const Eigen::VectorXd& a, const SecurityVector& q,
                                     const Eigen::MatrixXd& P) {
  const Eigen::VectorXd weighted = (a.array() * (1.0 - q.values().array())).matrix();
  return P * weighted;
}

double expected_stolen(const Eigen::VectorXd& a, const SecurityVector& q,
                       const Eigen::VectorXd& D) {
  return (a.array() * (1.0 - q.values().array()) * D.array()).sum();
}

double attacker_payoff(const Eigen::VectorXd& a, const SecurityVector& q, const Eigen::VectorXd& D,
                       double omega) {
  if (a.minCoeff() < -kSimplexTolerance || std::abs(a.sum() - 1.0) > kSimplexTolerance) {
    throw InvalidParameter("attack vector is not on the probability simplex");
  }
  return expected_stolen(a, q, D) - 0.5 * omega * a.squaredNorm();
}

StarAttack star_attack_closed_form(int n, double p, double q_center, double q_leaf, double omega) {
  if (n < 3) throw InvalidParameter("star_attack_closed_form needs n >= 3");
  check_probability(q_center, "q_center");
  check_probability(q_leaf, "q_leaf");
  check_cost_coefficient(omega, "omega");
  const double delta =
      (1.0 - q_center) * star_center_documents(n, p) - (1.0 - q_leaf) * star_leaf_documents(n, p);
  if (omega <= delta) return {1.0, 0.0};
  if (omega <= -(n - 1) * delta) return {0.0, 1.0 / (n - 1)};
  return {1.0 / n + (1.0 - 1.0 / n) * delta / omega, 1.0 / n - delta / (omega * n)};
}

}  // namespace netsec
